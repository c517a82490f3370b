// One line per acceptance criterion; exit status is the number of failures.
#include "a2act/duality.hpp"
#include "a2act/moddef.hpp"
#include "a2act/pipeline.hpp"
#include "a2act/variety.hpp"

#include "fixtures.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace a2act;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::vector<std::string> names_of(const ReductionResult& r, const std::vector<Var>& vs) {
    std::vector<std::string> out;
    for (Var v : vs) out.push_back(r.table.name(v));
    return out;
}

const StepCounts* find_step(const ReductionResult& r, const std::string& label) {
    for (const auto& s : r.log)
        if (s.label == label) return &s;
    return nullptr;
}

void check_step(Outcome& o, const ReductionResult& r, const std::string& label, std::size_t distinct,
                std::size_t linear, std::size_t basis) {
    const auto* s = find_step(r, label);
    if (!s) return o.require(false, "missing step " + label);
    std::ostringstream got;
    got << case_name(r.action_case) << " " << label << " " << s->distinct << "/" << s->linear << "/" << s->basis;
    o.require(s->distinct == distinct && s->linear == linear && s->basis == basis, got.str());
}

std::vector<Poly> read_relations(const std::string& file, const VarTable& t) {
    std::vector<Poly> out;
    for (const auto& line : fixtures::lines(file))
        if (!line.empty()) out.push_back(boolean_nf(parse_poly(line, t)));
    return out;
}

bool sq_family_lower_left_zero(const NumericFamily& f) {
    for (int i = 1; i <= 23; ++i)
        for (int n = 0; n + i <= 23; ++n) {
            std::size_t bn = basis(n, BasisPart::B).size(), bt = basis(n + i, BasisPart::B).size();
            std::size_t rows = basis(n).size();
            for (std::size_t r = bn; r < rows; ++r)
                for (std::size_t c = 0; c < bt; ++c)
                    if (f.sq(i, n).get(r, c)) return false;
        }
    return true;
}

std::uint32_t mask_of(const VarietyPoint& p) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k]) m |= 1u << k;
    return m;
}

// ---- criteria

Outcome c1() {
    Outcome o;
    const auto& r = reduction(ActionCase::Symmetric);
    o.require(names_of(r, r.free) ==
                  std::vector<std::string>{"a1", "a2", "a13", "a23", "b1", "c1", "d1", "d2", "d3"},
              "free variables differ");
    auto I = boolean_nf(parse_poly("a1*a2 + a1*a13 + a2*a13*b1 + a2*a13*a23 + a2*a13 + a2*a23 + a2*b1 + a2 + b1",
                                   r.table));
    o.require(r.relations == std::vector<Poly>{I}, "residual relation differs from I");
    auto n8 = enumerate_points(sq8_subvariety(ActionCase::Symmetric)).size();
    auto n16 = enumerate_points(sq16_subvariety(ActionCase::Symmetric)).size();
    auto all = enumerate_points(variety(ActionCase::Symmetric)).size();
    o.require(n8 == 16 && n16 == 16 && all == 256, "point counts " + std::to_string(n8) + " x " +
                                                     std::to_string(n16) + " = " + std::to_string(all));
    if (o.ok) o.detail = "9 free variables, relation I, 16 x 16 = 256 points";
    return o;
}

Outcome c2() {
    Outcome o;
    const auto& s = reduction(ActionCase::Symmetric);
    const auto& g = reduction(ActionCase::General);
    check_step(o, s, "sq8", 496, 452, 81);
    check_step(o, s, "sq16", 95, 50, 19);
    check_step(o, g, "sq8", 564, 519, 105);
    const auto* rep = find_step(g, "sq8 repeat");
    o.require(rep && rep->distinct == 22 && rep->linear == 3, "general repeat pass");
    check_step(o, g, "sq16", 92, 45, 18);
    o.require(g.nonlinear_input.size() == 22, "general nonlinear count");
    o.require(s.nonlinear_input.size() == 19, "symmetric nonlinear count");
    if (o.ok) {
        std::ostringstream d;
        d << "raw counts sym " << find_step(s, "sq8")->raw << "/" << find_step(s, "sq16")->raw << ", gen "
          << find_step(g, "sq8")->raw << "/" << rep->raw << "/" << find_step(g, "sq16")->raw;
        o.detail = d.str();
    }
    return o;
}

Outcome c3() {
    Outcome o;
    std::size_t rows = 0;
    for (auto [c, file, expect] : {std::tuple{ActionCase::Symmetric, "sym_dictionary.tsv", 119u},
                                   std::tuple{ActionCase::General, "gen_dictionary.tsv", 150u}}) {
        const auto& r = reduction(c);
        auto dict = fixtures::dictionary(file);
        o.require(dict.size() == expect, std::string(file) + " has " + std::to_string(dict.size()) + " rows");
        for (const auto& row : dict) {
            Var v = r.table.at(row.name);
            bool same = r.dictionary[v] == boolean_nf(parse_poly(row.value, r.table));
            // row index counts down from the top variable
            same = same && static_cast<std::size_t>(row.index) == r.table.size() - v;
            o.require(same, case_name(c) + " " + row.name);
            rows += same;
        }
    }
    if (o.ok) o.detail = std::to_string(rows) + " rows identical";
    return o;
}

Outcome c4() {
    Outcome o;
    const auto& g = reduction(ActionCase::General);
    o.require(names_of(g, g.free) == std::vector<std::string>{"a1", "a2", "a3", "a21", "a47", "a48", "a60", "a61",
                                                              "a62", "b1", "b2", "b3", "b4"},
              "free variables differ");
    auto reference = read_relations("gen_relations.txt", g.table);
    o.require(g.relations.size() == 3, "relation count");
    bool same_ideal =
        fixtures::boolean_ideal_generator(g.relations) == fixtures::boolean_ideal_generator(reference);
    o.require(same_ideal, "ideal differs");
    std::set<Poly> got(g.relations.begin(), g.relations.end());
    std::size_t verbatim = 0;
    for (const auto& p : reference) verbatim += got.count(p);
    auto n8 = enumerate_points(sq8_subvariety(ActionCase::General));
    auto all = enumerate_points(variety(ActionCase::General)).size();
    o.require(n8.size() == 100 && all == 1600, "point counts");
    o.require(n8 == fixtures::point_table("gen_sq8_points.txt").points, "Sq^8 table differs");
    if (o.ok)
        o.detail = "13 free, same ideal (" + std::to_string(verbatim) +
                   " of 3 generators verbatim), 100 x 16 = 1600, table identical";
    return o;
}

Outcome c5() {
    Outcome o;
    auto b = variety(ActionCase::BOnly);
    auto pts = enumerate_points(b);
    o.require(pts.size() == 32, "B point count");
    auto sym = variety(ActionCase::Symmetric);
    std::map<std::vector<std::uint8_t>, std::set<std::uint8_t>> lifts;
    for (const auto& p : pts) {
        auto& slot = lifts[{p.bits.begin(), p.bits.begin() + 4}];
        for (const auto& l : lift_check(p)) slot.insert(l[sym.index_of("b1")]);
    }
    std::set<std::vector<std::uint8_t>> none, twice;
    for (const auto& [k, v] : lifts) {
        if (v.empty()) none.insert(k);
        if (v.size() == 2) twice.insert(k);
    }
    o.require(none == std::set<std::vector<std::uint8_t>>{{0, 1, 0, 0}, {1, 1, 0, 1}}, "non-lifting set");
    o.require(twice == std::set<std::vector<std::uint8_t>>{{0, 1, 0, 1}, {1, 1, 0, 0}}, "double-lift set");
    if (o.ok) o.detail = "32 points; no lift {(0,1,0,0),(1,1,0,1)}; two lifts {(0,1,0,1),(1,1,0,0)}";
    return o;
}

Outcome c6() {
    Outcome o;
    auto pts = enumerate_points(sq8_subvariety(ActionCase::Symmetric));
    std::set<VarietyPoint> set(pts.begin(), pts.end()), image;
    for (unsigned k = 0; k < 16; ++k) {
        std::array<std::uint8_t, 4> q{};
        for (int j = 0; j < 4; ++j) q[j] = (k >> j) & 1;
        auto p = affine_F(q);
        o.require(affine_G(p) == q, "G(F(q)) != q");
        image.insert(VarietyPoint{{p.begin(), p.end()}});
    }
    o.require(image == set, "F is not onto the Sq^8 set");
    for (const auto& p : pts) {
        std::array<std::uint8_t, 5> a{};
        std::copy(p.bits.begin(), p.bits.end(), a.begin());
        o.require(affine_F(affine_G(a)) == a, "F(G(p)) != p");
    }
    if (o.ok) o.detail = "16 points, both composites identity";
    return o;
}

Outcome c7() {
    Outcome o;
    const auto& g = reduction(ActionCase::General);
    auto d = variety(ActionCase::General);
    o.require(d.vars == g.free, "coordinates are not the free variables");
    CompiledFamily cf(g.family, g.free);
    std::size_t a60 = d.index_of("a60"), preserving = 0;
    auto pts = enumerate_points(d);
    for (const auto& p : pts) {
        bool zero = sq_family_lower_left_zero(cf.at(mask_of(p)));
        o.require(zero == (p[a60] == 0), "point " + format_point(p));
        preserving += zero;
    }
    if (o.ok) o.detail = std::to_string(pts.size()) + " points, " + std::to_string(preserving) + " preserve Im Q2";
    return o;
}

Outcome c8() {
    Outcome o;
    auto incl = map_sym_to_gen();
    auto q = map_q(), s = map_s();
    for (const auto& p : enumerate_points(variety(ActionCase::Symmetric))) {
        auto g = incl.apply(p);
        o.require(on_variety(incl.target, g) && vq_member(g), "incl leaves V_Q at " + format_point(p));
        if (vq_member(g)) o.require(map_to_b(s, g) == map_to_b(q, g), "s != q at " + format_point(p));
    }
    auto b = variety(ActionCase::BOnly);
    auto vq = vq_points();
    for (const auto& p : vq) {
        o.require(on_variety(b, map_to_b(q, p)), "q leaves V_B");
        o.require(on_variety(b, map_to_b(s, p)), "s leaves V_B");
    }
    if (o.ok) o.detail = "256 symmetric points, " + std::to_string(vq.size()) + " V_Q points";
    return o;
}

Outcome c9() {
    Outcome o;
    std::ostringstream detail;
    for (auto [c, file] : {std::pair{ActionCase::Symmetric, "sym_duality.tsv"},
                           std::pair{ActionCase::General, "gen_duality.tsv"},
                           std::pair{ActionCase::BOnly, "b_duality.tsv"}}) {
        const auto& d = duality(c);
        auto formulas = fixtures::formulas(file);
        std::vector<std::pair<std::size_t, Poly>> reference;
        for (const auto& [name, expr] : formulas)
            reference.emplace_back(d.variety.index_of(name), parse_poly(expr, d.variety.table));
        o.require(reference.size() == d.variety.vars.size(), std::string(file) + " incomplete");
        auto pts = enumerate_points(d.variety);
        for (const auto& p : pts) {
            auto q = dual_point(d, p);
            auto a = assignment(d.variety, p);
            for (const auto& [k, f] : reference)
                if (q[k] != evaluate(f, a)) {
                    o.require(false, case_name(c) + " formula for " + d.variety.names()[k]);
                    break;
                }
            o.require(dual_point(d, q) == p, case_name(c) + " D^2 != I");
        }
        detail << case_name(c) << " " << self_dual_points(c).size() << " ";
    }
    auto sd_sym = self_dual_points(ActionCase::Symmetric);
    auto sd_gen = self_dual_points(ActionCase::General);
    o.require(sd_sym == fixtures::point_table("sym_self_dual.txt").points, "symmetric self-dual list");
    o.require(sd_gen == fixtures::point_table("gen_self_dual.txt").points, "general self-dual list");
    o.require(sd_sym.size() == 16 && sd_gen.size() == 40 && self_dual_points(ActionCase::BOnly).size() == 8,
              "self-dual counts");
    if (o.ok) o.detail = "formulas agree at every point, D^2 = I, self-dual " + detail.str() + "(lists identical)";
    return o;
}

Outcome c10() {
    Outcome o;
    auto failures = duality_exchange_failures();
    o.require(failures == 0, std::to_string(failures) + " failing V_Q points");
    if (o.ok) o.detail = "both identities on all " + std::to_string(vq_points().size()) + " V_Q points";
    return o;
}

Outcome c11() {
    Outcome o;
    auto r = literature_actions();
    o.require(r.bbbcx_dual.bits == std::vector<std::uint8_t>{1, 1, 1, 1, 0, 0, 1, 1, 0},
              "dual of symmetric zero is " + format_point(r.bbbcx_dual));
    o.require(r.q_of_bbbcx == VarietyPoint{{0, 0, 0, 0, 0}}, "q o incl of zero is " + format_point(r.q_of_bbbcx));
    if (o.ok) o.detail = "D(0) = (1,1,1,1,0 | 0,1,1,0), q(incl(0)) = 0";
    return o;
}

Outcome c12() {
    Outcome o;
    o.require(hopf_identity_check({3, 2, 1}).holds, "(3,2,1)");
    o.require(hopf_identity_check({3, 2}).holds, "(3,2)");
    o.require(!hopf_identity_check({3, 0, 1}).holds, "(3,0,1)");
    if (o.ok) o.detail = "(3,2,1) true, (3,2) true, (3,0,1) false";
    return o;
}

// Generic family before any relation is imposed.
SqFamily generic_family(ActionCase c, const VarTable& t) {
    SqFamily f = init_known_sq(c);
    generic_sq8(f, c, t);
    derive_sq_range(f, 8);
    generic_sq16(f, c, t);
    derive_sq_range(f, 16);
    return f;
}

Outcome c13() {
    Outcome o;
    std::mt19937 rng(20240601);
    std::ostringstream detail;
    for (auto c : {ActionCase::Symmetric, ActionCase::General, ActionCase::BOnly}) {
        const auto& r = reduction(c);
        auto d = variety(c);
        auto pts = enumerate_points(d);
        CompiledFamily cf(r.family, r.free);
        std::vector<VarietyPoint> on;
        if (c == ActionCase::Symmetric) on = pts;
        for (int k = 0; k < 200; ++k) on.push_back(pts[rng() % pts.size()]);
        std::size_t bad_on = 0;
        for (const auto& p : on) bad_on += !adem_holds(cf.at(mask_of(p)));
        o.require(bad_on == 0, case_name(c) + ": " + std::to_string(bad_on) + " variety points fail");

        std::size_t caught = 0, tried = 0;
        if (d.relations.empty()) {
            // no relations among the free variables: perturb the full table instead
            auto gen = generic_family(c, r.table);
            for (; tried < 200; ++tried) {
                std::vector<std::uint8_t> a(r.table.size());
                for (auto& x : a) x = rng() & 1;
                caught += !verify_adem(gen, a);
            }
        } else {
            std::uniform_int_distribution<std::uint32_t> any(0, (1u << d.vars.size()) - 1);
            while (tried < 200) {
                VarietyPoint p;
                auto m = any(rng);
                for (std::size_t k = 0; k < d.vars.size(); ++k) p.bits.push_back((m >> k) & 1);
                if (on_variety(d, p)) continue;
                ++tried;
                caught += !adem_holds(cf.at(m));
            }
        }
        o.require(caught == tried, case_name(c) + ": " + std::to_string(tried - caught) + " off-variety passes");
        detail << case_name(c) << " " << on.size() << "/" << tried << " ";
    }
    if (o.ok) o.detail = "on/off samples " + detail.str();
    return o;
}

Outcome c14() {
    Outcome o;
    VarietyPoint zero{std::vector<std::uint8_t>(9, 0)};
    auto text = write_moddef(export_moddef(ActionCase::Symmetric, zero));
    ModdefFile back;
    try {
        back = parse_moddef(text);
    } catch (const ModdefError& e) {
        o.require(false, e.what());
        return o;
    }
    o.require(adem_holds(numeric_family(back, BasisPart::Full)), "parsed action fails Adem");
    // header as the reference writer emits it
    std::string head = "64\n";
    int count = 0;
    for (int n = 0; n <= 23; ++n)
        for (std::size_t k = 0; k < basis(n).size(); ++k) {
            head += std::to_string(n);
            if (++count >= 10) {
                head += "\n";
                count = 0;
            } else {
                head += " ";
            }
        }
    head += "\n\n";
    o.require(text.compare(0, head.size(), head) == 0, "header layout");
    o.require(text.size() >= 2 && text.compare(text.size() - 2, 2, "\n\n") == 0, "trailer");
    if (o.ok) o.detail = "round trip ok, Adem holds, header identical (" + std::to_string(head.size()) + " bytes)";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"symmetric variety", c1},
        {"step counts", c2},
        {"dictionaries", c3},
        {"general variety", c4},
        {"B(2) variety and lifts", c5},
        {"affine bijection", c6},
        {"Im Q2 preservation", c7},
        {"maps between varieties", c8},
        {"duality", c9},
        {"s and q under duality", c10},
        {"literature actions", c11},
        {"Hopf identity", c12},
        {"Adem soundness", c13},
        {"moddef export", c14},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.ok;
        std::printf("criterion %2zu %s: %s (%s)\n", k + 1, o.ok ? "PASS" : "FAIL", criteria[k].first.c_str(),
                    o.detail.c_str());
    }
    std::fflush(stdout);
    return failures;
}
