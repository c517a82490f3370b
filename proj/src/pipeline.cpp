#include "a2act/pipeline.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace a2act {

std::string case_name(ActionCase c) {
    switch (c) {
        case ActionCase::Symmetric: return "sym";
        case ActionCase::General: return "gen";
        case ActionCase::BOnly: return "b";
    }
    return "?";
}

ActionCase parse_case(const std::string& s) {
    if (s == "sym" || s == "symmetric") return ActionCase::Symmetric;
    if (s == "gen" || s == "general") return ActionCase::General;
    if (s == "b" || s == "B") return ActionCase::BOnly;
    throw std::invalid_argument("unknown case '" + s + "' (expected sym, gen or b)");
}

namespace {

void push_names(std::vector<std::string>& out, const std::string& prefix, int count) {
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
}

}  // namespace

VarTable make_var_table(ActionCase c) {
    std::vector<std::string> names;
    switch (c) {
        case ActionCase::Symmetric:
            push_names(names, "a", 28);
            push_names(names, "b", 66);
            push_names(names, "c", 1);
            push_names(names, "d", 24);
            break;
        case ActionCase::General:
            push_names(names, "a", 124);
            push_names(names, "b", 26);
            break;
        case ActionCase::BOnly:
            push_names(names, "a", 28);
            push_names(names, "c", 1);
            break;
    }
    return VarTable(std::move(names));
}

BasisPart family_part(ActionCase c) { return c == ActionCase::BOnly ? BasisPart::B : BasisPart::Full; }

SqFamily init_known_sq(ActionCase c) {
    const BasisPart part = family_part(c);
    SqFamily fam(part);
    for (int i = 1; i <= 7; ++i) {
        for (int n = 0; n + i <= SqFamily::kMax; ++n) {
            auto src = basis(n, part);
            auto tgt = basis(n + i, part);
            PolyMatrix m(src.size(), tgt.size());
            for (std::size_t r = 0; r < src.size(); ++r) {
                auto terms = sq_act(i, src[r]);
                for (std::size_t col = 0; col < tgt.size(); ++col)
                    if (std::binary_search(terms.begin(), terms.end(), tgt[col])) m.at(r, col) = Poly::one();
            }
            fam.set(i, n, std::move(m));
        }
    }
    return fam;
}

namespace {

// Hands out prefix1, prefix2, ... in order.
class Fresh {
public:
    Fresh(const VarTable& t, std::string prefix) : table_(t), prefix_(std::move(prefix)) {}
    Poly next() {
        Var v = table_.at(prefix_ + std::to_string(++count_));
        used_.push_back(v);
        return Poly::var(v);
    }
    std::vector<Var> used() const { return used_; }

private:
    const VarTable& table_;
    std::string prefix_;
    int count_ = 0;
    std::vector<Var> used_;
};

PolyMatrix generic(std::size_t rows, std::size_t cols, Fresh& fresh) {
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = fresh.next();
    return m;
}

std::size_t bdim(int n) { return basis(n, BasisPart::B).size(); }

// Symmetric generator of degree g: diagonal blocks B_n -> B_{n+g} from `diag`,
// off-diagonal blocks B_n -> B_{n+g-7} from `off`.
void install_symmetric(SqFamily& fam, int g, Fresh& diag, Fresh& off) {
    std::vector<PolyMatrix> d, o;
    for (int n = 0; n <= SqFamily::kMax; ++n) d.push_back(generic(bdim(n), bdim(n + g), diag));
    for (int n = 0; n <= SqFamily::kMax; ++n) o.push_back(generic(bdim(n), bdim(n + g - 7), off));
    for (int n = 0; n + g <= SqFamily::kMax; ++n) {
        PolyMatrix lower = n >= 7 ? d[n - 7] : PolyMatrix(0, bdim(n + g - 7));
        fam.set(g, n, assemble_block(d[n], o[n], lower));
    }
}

void install_generic(SqFamily& fam, int g, Fresh& fresh) {
    for (int n = 0; n + g <= SqFamily::kMax; ++n) fam.set(g, n, generic(fam.dim(n), fam.dim(n + g), fresh));
}

std::vector<Var> concat(std::vector<Var> a, const std::vector<Var>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::vector<Var> generic_sq8(SqFamily& fam, ActionCase c, const VarTable& table) {
    Fresh a(table, "a");
    if (c == ActionCase::Symmetric) {
        Fresh b(table, "b");
        install_symmetric(fam, 8, a, b);
        return concat(a.used(), b.used());
    }
    install_generic(fam, 8, a);
    return a.used();
}

std::vector<Var> generic_sq16(SqFamily& fam, ActionCase c, const VarTable& table) {
    if (c == ActionCase::Symmetric) {
        Fresh cc(table, "c"), d(table, "d");
        install_symmetric(fam, 16, cc, d);
        return concat(cc.used(), d.used());
    }
    Fresh f(table, c == ActionCase::General ? "b" : "c");
    install_generic(fam, 16, f);
    return f.used();
}

void derive_sq_range(SqFamily& fam, int g) {
    const int top = SqFamily::kMax;
    auto S = [&](int i, int n) -> const PolyMatrix& { return fam.sq(i, n); };
    auto define = [&](int i, auto&& recipe) {
        for (int n = 0; n + i <= top; ++n) fam.set(i, n, recipe(n));
    };
    // Sq^1 Sq^g
    define(g + 1, [&](int n) { return compose(S(g, n), S(1, n + g)); });
    // Sq^2 Sq^g + Sq^{g+1} Sq^1
    define(g + 2, [&](int n) { return compose(S(g, n), S(2, n + g)) + compose(S(1, n), S(g + 1, n + 1)); });
    define(g + 3, [&](int n) { return compose(S(g + 2, n), S(1, n + g + 2)); });
    // Sq^4 Sq^g + Sq^{g+3} Sq^1 + Sq^{g+2} Sq^2
    define(g + 4, [&](int n) {
        return compose(S(g, n), S(4, n + g)) + compose(S(1, n), S(g + 3, n + 1)) + compose(S(2, n), S(g + 2, n + 2));
    });
    define(g + 5, [&](int n) { return compose(S(g + 4, n), S(1, n + g + 4)); });
    define(g + 6,
           [&](int n) { return compose(S(g + 4, n), S(2, n + g + 4)) + compose(S(1, n), S(g + 5, n + 1)); });
    define(g + 7, [&](int n) { return compose(S(g + 6, n), S(1, n + g + 6)); });
}

// ---- residuals

std::size_t ResidualSet::linear() const {
    return std::count_if(distinct.begin(), distinct.end(), [](const Poly& p) { return p.degree() == 1; });
}

std::vector<Poly> ResidualSet::linear_relations() const {
    std::vector<Poly> out;
    for (const auto& p : distinct)
        if (p.degree() == 1) out.push_back(p);
    return out;
}

namespace {

template <class Visit>
void for_each_adem(int i_max, bool guard, int top, Visit&& visit) {
    for (int b = 1; b <= i_max; ++b) {
        for (int a = 1; a <= std::min(i_max, 2 * b - 1); ++a) {
            if (guard) {
                bool ok = true;
                for (int k = 0; k <= a / 2; ++k)
                    if (binom_mod2(b - k - 1, a - 2 * k) && a + b - k > i_max) ok = false;
                if (!ok) continue;
            }
            for (int n = 0; n + a + b <= top; ++n) visit(a, b, n);
        }
    }
}

}  // namespace

ResidualSet adem_residuals(const SqFamily& fam, int i_max, bool guard) {
    ResidualSet out;
    std::set<Poly> seen;
    for_each_adem(i_max, guard, SqFamily::kMax, [&](int a, int b, int n) {
        PolyMatrix m = compose(fam.sq(b, n), fam.sq(a, n + b));
        for (int k = 0; k <= a / 2; ++k)
            if (binom_mod2(b - k - 1, a - 2 * k)) m += compose(fam.sq(k, n), fam.sq(a + b - k, n + k));
        if (m.is_zero()) return;
        out.raw += m.entries().size();
        for (const auto& p : m.entries())
            if (!p.is_zero()) seen.insert(p);
    });
    out.distinct.assign(seen.begin(), seen.end());
    return out;
}

// ---- linear step

LinearStep linear_eliminate(const ResidualSet& res, const std::vector<Var>& live, std::size_t nvars,
                            std::string label) {
    LinearStep step;
    step.basis = linear_rref(nvars, res.linear_relations());
    if (step.basis.inconsistent())
        throw InconsistentActionSpace("linear relations" + (label.empty() ? "" : " (" + label + ")") +
                                      " reduce to 1 = 0: no module structure exists");
    for (Var v : live)
        if (!step.basis.is_pivot(v)) step.survivors.push_back(v);
    step.counts = {std::move(label), res.raw, res.distinct.size(), res.linear(), step.basis.size(),
                   step.survivors.size()};
    return step;
}

// ---- nonlinear step

NonlinearResult nonlinear_eliminate(const std::vector<Poly>& relations, const std::vector<Var>& live,
                                    std::size_t nvars) {
    NonlinearResult out;
    std::vector<Poly> rels = relations;
    out.map = SubstMap::identity(nvars);
    std::vector<Var> order = live;
    std::sort(order.rbegin(), order.rend());
    std::set<Var> gone;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Var v : order) {
            if (gone.count(v)) continue;
            std::size_t best = rels.size();
            for (std::size_t i = 0; i < rels.size(); ++i) {
                if (!safe(v, rels[i])) continue;
                if (best == rels.size() || rels[i].size() < rels[best].size()) best = i;
            }
            if (best == rels.size()) continue;
            SubstMap g1 = SubstMap::identity(nvars);
            g1.set(v, rels[best] + Poly::var(v));
            out.steps.push_back({v, best + 1, rels[best]});
            for (auto& r : rels) r = substitute(r, g1, Reduce::Boolean);
            out.map = compose(out.map, g1, Reduce::Boolean);
            gone.insert(v);
            progress = true;
        }
    }
    for (Var v : live)
        if (!gone.count(v)) out.free.push_back(v);
    std::sort(out.free.begin(), out.free.end());
    std::set<Poly> distinct;
    for (const auto& r : rels)
        if (!r.is_zero() && distinct.insert(r).second) out.relations.push_back(r);
    return out;
}

// ---- orchestration

namespace {

struct Driver {
    ActionCase kase;
    VarTable table;
    SqFamily fam;
    SubstMap total;          // accumulated linear substitutions
    std::vector<Var> live;   // introduced and not yet eliminated
    std::vector<StepCounts> log;

    explicit Driver(ActionCase c) : kase(c), table(make_var_table(c)), fam(init_known_sq(c)) {
        total = SubstMap::identity(table.size());
    }

    ResidualSet pass(int i_max, bool guard, const std::string& label) {
        ResidualSet res = adem_residuals(fam, i_max, guard);
        LinearStep step = linear_eliminate(res, live, table.size(), label);
        log.push_back(step.counts);
        if (step.basis.size() > 0) {
            const SubstMap& m = step.basis.as_map();
            total = compose(total, m);
            fam = fam.mapped(m);
            live = step.survivors;
        }
        return res;
    }
};

}  // namespace

ReductionResult run_case(ActionCase c) {
    Driver d(c);
    ReductionResult out;
    out.action_case = c;

    out.sq8_vars = generic_sq8(d.fam, c, d.table);
    d.live = out.sq8_vars;
    derive_sq_range(d.fam, 8);
    d.pass(15, true, "sq8");
    if (c == ActionCase::General) {
        d.pass(15, true, "sq8 repeat");
        d.pass(15, true, "sq8 recheck");
    }

    out.sq16_vars = generic_sq16(d.fam, c, d.table);
    d.live.insert(d.live.end(), out.sq16_vars.begin(), out.sq16_vars.end());
    derive_sq_range(d.fam, 16);
    ResidualSet last = d.pass(SqFamily::kMax, false, "sq16");

    std::vector<Poly> rels;
    if (c == ActionCase::General) {
        last = d.pass(SqFamily::kMax, false, "sq16 repeat");
        rels = last.distinct;
    } else {
        std::set<Poly> mapped;
        for (const auto& p : last.distinct) {
            Poly q = substitute(p, d.total);
            if (!q.is_zero()) mapped.insert(q);
        }
        rels.assign(mapped.begin(), mapped.end());
    }
    std::vector<Poly> input;
    for (const auto& r : rels) {
        Poly b = boolean_nf(r);
        if (!b.is_zero()) input.push_back(std::move(b));
    }

    NonlinearResult nl = nonlinear_eliminate(input, d.live, d.table.size());
    StepCounts third{"nonlinear", 0, input.size(), 0, nl.steps.size(), nl.free.size()};
    d.log.push_back(third);

    out.table = d.table;
    out.free = nl.free;
    out.relations = nl.relations;
    out.dictionary = compose(d.total, nl.map, Reduce::Boolean);
    out.family = d.fam.mapped(nl.map, Reduce::Boolean);
    out.log = std::move(d.log);
    out.nonlinear_input = std::move(input);
    out.eliminations = std::move(nl.steps);
    return out;
}

const ReductionResult& reduction(ActionCase c) {
    static std::mutex mu;
    static std::map<ActionCase, ReductionResult> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, run_case(c)).first;
    return it->second;
}

// ---- numeric families

bool BitMatrix::is_zero() const {
    for (std::size_t r = 0; r < rows; ++r)
        if (row[r]) return false;
    return true;
}

BitMatrix compose(const BitMatrix& first, const BitMatrix& then) {
    if (first.cols != then.rows) throw std::invalid_argument("BitMatrix compose: shape mismatch");
    BitMatrix out;
    out.rows = first.rows;
    out.cols = then.cols;
    for (std::size_t r = 0; r < first.rows; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t k = 0; k < first.cols; ++k)
            if ((first.row[r] >> k) & 1u) acc ^= then.row[k];
        out.row[r] = acc;
    }
    return out;
}

NumericFamily::NumericFamily(BasisPart part) : part_(part) {
    for (int i = 0; i < 24; ++i) {
        for (int n = 0; n < 24; ++n) {
            auto& m = m_[i][n];
            m.rows = static_cast<std::uint8_t>(basis(n, part).size());
            m.cols = static_cast<std::uint8_t>(basis(n + i, part).size());
            if (i == 0)
                for (std::size_t r = 0; r < m.rows; ++r) m.row[r] = static_cast<std::uint8_t>(1u << r);
        }
    }
}

NumericFamily to_numeric(const SqFamily& fam) {
    NumericFamily out(fam.part());
    for (int i = 0; i < 24; ++i) {
        for (int n = 0; n < 24; ++n) {
            const auto& m = fam.sq(i, n);
            auto& b = out.sq(i, n);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::uint8_t bits = 0;
                for (std::size_t col = 0; col < m.cols(); ++col) {
                    const Poly& p = m.at(r, col);
                    if (!p.is_constant()) throw std::invalid_argument("to_numeric: non-constant entry");
                    if (p.is_one()) bits |= static_cast<std::uint8_t>(1u << col);
                }
                b.row[r] = bits;
            }
        }
    }
    return out;
}

CompiledFamily::CompiledFamily(const SqFamily& fam, std::vector<Var> vars) : part_(fam.part()), vars_(std::move(vars)) {
    if (vars_.size() > 32) throw std::invalid_argument("CompiledFamily: at most 32 variables");
    std::map<Var, std::uint32_t> bit;
    for (std::size_t k = 0; k < vars_.size(); ++k) bit[vars_[k]] = 1u << k;
    for (int i = 1; i < 24; ++i) {
        for (int n = 0; n + i < 24; ++n) {
            const auto& m = fam.sq(i, n);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    const Poly& p = m.at(r, c);
                    if (p.is_zero()) continue;
                    Entry e{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(r),
                            static_cast<std::uint8_t>(c), {}};
                    for (const auto& mono : p.terms()) {
                        std::uint32_t mask = 0;
                        for (Var v : mono.vars()) {
                            auto it = bit.find(v);
                            if (it == bit.end()) throw std::invalid_argument("CompiledFamily: entry uses an unlisted variable");
                            mask |= it->second;
                        }
                        e.monomials.push_back(mask);
                    }
                    entries_.push_back(std::move(e));
                }
            }
        }
    }
}

NumericFamily CompiledFamily::at(std::uint32_t point) const {
    NumericFamily out(part_);
    for (const auto& e : entries_) {
        bool v = false;
        for (auto mask : e.monomials) v ^= (mask & point) == mask;
        if (v) out.sq(e.i, e.n).row[e.r] |= static_cast<std::uint8_t>(1u << e.c);
    }
    return out;
}

bool adem_holds(const NumericFamily& f) {
    bool ok = true;
    const int top = SqFamily::kMax;
    for (int b = 1; b <= top && ok; ++b) {
        for (int a = 1; a <= 2 * b - 1 && ok; ++a) {
            for (int n = 0; n + a + b <= top; ++n) {
                BitMatrix m = compose(f.sq(b, n), f.sq(a, n + b));
                for (int k = 0; k <= a / 2; ++k) {
                    if (!binom_mod2(b - k - 1, a - 2 * k)) continue;
                    BitMatrix t = compose(f.sq(k, n), f.sq(a + b - k, n + k));
                    for (std::size_t r = 0; r < m.rows; ++r) m.row[r] ^= t.row[r];
                }
                if (!m.is_zero()) {
                    ok = false;
                    break;
                }
            }
        }
    }
    return ok;
}

bool verify_adem(const SqFamily& fam, std::span<const std::uint8_t> assignment) {
    SqFamily numeric = fam.mapped([&](const Poly& p) { return Poly::constant(evaluate(p, assignment)); });
    return adem_holds(to_numeric(numeric));
}

}  // namespace a2act
