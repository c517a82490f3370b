#include "a2act/moddef.hpp"

#include "a2act/duality.hpp"

#include <algorithm>
#include <sstream>

namespace a2act {

namespace {

struct Generators {
    std::vector<int> degree;
    std::vector<int> first;  // first generator index of each degree

    explicit Generators(BasisPart part) : first(SqFamily::kMax + 2, 0) {
        for (int n = 0; n <= SqFamily::kMax; ++n) {
            first[n] = static_cast<int>(degree.size());
            for (std::size_t k = 0; k < basis(n, part).size(); ++k) degree.push_back(n);
        }
        first[SqFamily::kMax + 1] = static_cast<int>(degree.size());
    }
};

BasisPart part_of_count(std::size_t count) {
    if (count == algebra_dimension(BasisPart::Full)) return BasisPart::Full;
    if (count == algebra_dimension(BasisPart::B)) return BasisPart::B;
    throw ModdefError("moddef: generator count " + std::to_string(count) + " matches neither A(2) nor B(2)");
}

}  // namespace

ModdefFile moddef_from_numeric(const NumericFamily& fam) {
    const BasisPart part = fam.part();
    const int top = top_degree(part);
    Generators g(part);
    ModdefFile f;
    f.degrees = g.degree;
    for (int gen = 0; gen < static_cast<int>(g.degree.size()); ++gen) {
        const int d = g.degree[gen];
        const int row = gen - g.first[d];
        for (int i = 1; i <= top - d; ++i) {
            const BitMatrix& m = fam.sq(i, d);
            if (m.row[row] == 0) continue;
            ModdefAction a{gen, i, {}};
            for (std::size_t c = 0; c < m.cols; ++c)
                if (m.get(row, c)) a.targets.push_back(g.first[d + i] + static_cast<int>(c));
            f.actions.push_back(std::move(a));
        }
    }
    return f;
}

NumericFamily numeric_action(ActionCase c, const VarietyPoint& p) {
    const VarietyDesc v = variety(c);
    if (!on_variety(v, p)) throw std::invalid_argument(format_point(p) + " is not on " + v.label);
    auto a = assignment(v, p);
    SqFamily fam = reduction(c).family.mapped([&](const Poly& x) { return Poly::constant(evaluate(x, a)); });
    return to_numeric(fam);
}

ModdefFile export_moddef(ActionCase c, const VarietyPoint& p) { return moddef_from_numeric(numeric_action(c, p)); }

std::string write_moddef(const ModdefFile& f) {
    std::ostringstream out;
    out << f.count() << "\n";
    int count = 0;
    for (int d : f.degrees) {
        out << d;
        if (++count >= 10) {
            out << "\n";
            count = 0;
        } else {
            out << " ";
        }
    }
    out << "\n\n";
    std::size_t k = 0;
    for (int gen = 0; gen < static_cast<int>(f.count()); ++gen) {
        for (; k < f.actions.size() && f.actions[k].generator == gen; ++k) {
            const auto& a = f.actions[k];
            out << a.generator << " " << a.op;
            for (int t : a.targets) out << " " << t;
            out << "\n";
        }
        out << "\n";
    }
    out << "\n";
    return out.str();
}

ModdefFile parse_moddef(std::string_view text) {
    std::istringstream in{std::string(text)};
    ModdefFile f;
    std::string line;
    auto fail = [](const std::string& why) -> ModdefFile { throw ModdefError("moddef: " + why); };

    if (!std::getline(in, line)) return fail("empty file");
    std::size_t n = 0;
    try {
        n = std::stoul(line);
    } catch (const std::exception&) {
        return fail("bad generator count '" + line + "'");
    }
    while (f.degrees.size() < n && std::getline(in, line)) {
        std::istringstream ls(line);
        int d;
        while (ls >> d) f.degrees.push_back(d);
    }
    if (f.degrees.size() != n) return fail("expected " + std::to_string(n) + " degrees");
    if (!std::is_sorted(f.degrees.begin(), f.degrees.end())) return fail("degrees must be weakly increasing");

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> nums;
        int x;
        while (ls >> x) nums.push_back(x);
        if (nums.empty()) continue;
        if (nums.size() < 3) return fail("short action line '" + line + "'");
        ModdefAction a{nums[0], nums[1], {nums.begin() + 2, nums.end()}};
        if (a.generator < 0 || a.generator >= static_cast<int>(n)) return fail("generator out of range in '" + line + "'");
        for (int t : a.targets) {
            if (t < 0 || t >= static_cast<int>(n) || f.degrees[t] != f.degrees[a.generator] + a.op)
                return fail("target in wrong degree in '" + line + "'");
        }
        f.actions.push_back(std::move(a));
    }
    return f;
}

NumericFamily numeric_family(const ModdefFile& f, BasisPart part) {
    if (part_of_count(f.count()) != part) throw ModdefError("moddef: generator count does not match the algebra");
    Generators g(part);
    if (g.degree != f.degrees) throw ModdefError("moddef: degrees do not match the Milnor basis");
    NumericFamily fam(part);
    for (const auto& a : f.actions) {
        const int d = f.degrees[a.generator];
        if (a.op < 1 || a.op > SqFamily::kMax || d + a.op > SqFamily::kMax) throw ModdefError("moddef: bad operation degree");
        BitMatrix& m = fam.sq(a.op, d);
        for (int t : a.targets) m.row[a.generator - g.first[d]] ^= static_cast<std::uint8_t>(1u << (t - g.first[d + a.op]));
    }
    return fam;
}

std::string moddef_filename(ActionCase c, const VarietyPoint& p) {
    return std::string(c == ActionCase::BOnly ? "Bof2-" : "Aof2-") + format_point(p, "");
}

LiteratureReport literature_actions() {
    LiteratureReport r;
    const auto sym = variety(ActionCase::Symmetric);
    const auto b = variety(ActionCase::BOnly);
    r.bbbcx.bits.assign(sym.vars.size(), 0);
    r.be.bits.assign(b.vars.size(), 0);
    r.bbbcx_dual = dual_point(duality(ActionCase::Symmetric), r.bbbcx);
    r.be_dual = dual_point(duality(ActionCase::BOnly), r.be);
    r.q_of_bbbcx = map_q().apply(map_sym_to_gen().apply(r.bbbcx));
    r.consistent = r.q_of_bbbcx == r.be;
    return r;
}

}  // namespace a2act
