#include "a2act/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace a2act {

SqFamily antipode_family(const SqFamily& fam) {
    SqFamily c = fam;
    for (int a = 3; a <= 16; ++a) {
        for (int n = 0; n + a <= SqFamily::kMax; ++n) {
            PolyMatrix m = c.sq(a, n);
            for (int k = 1; k < a; ++k) m += compose(c.sq(k, n), fam.sq(a - k, n + k), Reduce::Boolean);
            c.set(a, n, std::move(m));
        }
    }
    return c;
}

MilnorExponent theta(const MilnorExponent& r, BasisPart part) {
    if (!r.in_range() || (part == BasisPart::B && r.r3 != 0))
        throw std::invalid_argument("theta: exponent out of range " + r.str());
    if (part == BasisPart::B) return {7 - r.r1, 3 - r.r2, 0};
    return {7 - r.r1, 3 - r.r2, 1 - r.r3};
}

const std::vector<CoeffSpec>& coeff_table(ActionCase c) {
    static const std::vector<CoeffSpec> sym = {
        {"a1", 8, {0, 0, 0}, {5, 1, 0}},   {"a2", 8, {0, 0, 0}, {2, 2, 0}},   {"b1", 8, {0, 0, 0}, {1, 0, 1}},
        {"a13", 8, {4, 0, 0}, {6, 2, 0}},  {"a23", 8, {0, 2, 0}, {5, 3, 0}},  {"c1", 16, {0, 0, 0}, {7, 3, 0}},
        {"d1", 16, {0, 0, 0}, {6, 1, 1}},  {"d2", 16, {0, 0, 0}, {3, 2, 1}},  {"d3", 16, {0, 0, 0}, {0, 3, 1}},
    };
    static const std::vector<CoeffSpec> gen = {
        {"a1", 8, {0, 0, 0}, {5, 1, 0}},   {"a2", 8, {0, 0, 0}, {2, 2, 0}},   {"a3", 8, {0, 0, 0}, {1, 0, 1}},
        {"a21", 8, {4, 0, 0}, {6, 2, 0}},  {"a47", 8, {0, 2, 0}, {5, 3, 0}},  {"a48", 8, {0, 2, 0}, {7, 0, 1}},
        {"a60", 8, {0, 0, 1}, {6, 3, 0}},  {"a61", 8, {0, 0, 1}, {5, 1, 1}},  {"a62", 8, {0, 0, 1}, {2, 2, 1}},
        {"b1", 16, {0, 0, 0}, {7, 3, 0}},  {"b2", 16, {0, 0, 0}, {6, 1, 1}},  {"b3", 16, {0, 0, 0}, {3, 2, 1}},
        {"b4", 16, {0, 0, 0}, {0, 3, 1}},
    };
    static const std::vector<CoeffSpec> b = {
        {"a1", 8, {0, 0, 0}, {5, 1, 0}},  {"a2", 8, {0, 0, 0}, {2, 2, 0}},  {"a13", 8, {4, 0, 0}, {6, 2, 0}},
        {"a23", 8, {0, 2, 0}, {5, 3, 0}}, {"c1", 16, {0, 0, 0}, {7, 3, 0}},
    };
    switch (c) {
        case ActionCase::Symmetric: return sym;
        case ActionCase::General: return gen;
        case ActionCase::BOnly: return b;
    }
    return sym;
}

VarietyPoint DualityMap::apply(const VarietyPoint& p) const {
    auto a = assignment(variety, p);
    VarietyPoint out;
    for (const auto& img : images) out.bits.push_back(evaluate(img, a));
    return out;
}

DualityMap dual_coordinate_map(ActionCase c) {
    const auto& red = reduction(c);
    const BasisPart part = family_part(c);
    const int top = top_degree(part);
    SqFamily chi = antipode_family(red.family);

    DualityMap d{c, variety(c), {}};
    d.images.resize(d.variety.vars.size());
    std::vector<bool> seen(d.images.size());
    for (const auto& spec : coeff_table(c)) {
        const int k = spec.x.degree();
        const int n = top - k - spec.i;
        auto row = basis_index(theta(spec.y, part), part);
        auto col = basis_index(theta(spec.x, part), part);
        if (!row || !col || n < 0) throw std::logic_error("coefficient table entry out of range: " + spec.name);
        auto idx = d.variety.index_of(spec.name);
        d.images[idx] = boolean_nf(chi.sq(spec.i, n).at(*row, *col));
        seen[idx] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::logic_error("coefficient table does not cover every coordinate");
    return d;
}

const DualityMap& duality(ActionCase c) {
    static std::mutex mu;
    static std::map<ActionCase, DualityMap> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, dual_coordinate_map(c)).first;
    return it->second;
}

VarietyPoint dual_point(const DualityMap& d, const VarietyPoint& p) {
    if (!on_variety(d.variety, p))
        throw std::invalid_argument("dual_point: " + format_point(p) + " is not on " + d.variety.label);
    return d.apply(p);
}

std::vector<VarietyPoint> self_dual_points(ActionCase c) {
    const auto& d = duality(c);
    std::vector<VarietyPoint> out;
    for (const auto& p : enumerate_points(d.variety))
        if (d.apply(p) == p) out.push_back(p);
    return out;
}

std::size_t duality_exchange_failures() {
    const auto& dg = duality(ActionCase::General);
    const auto& db = duality(ActionCase::BOnly);
    const auto q = map_q();
    const auto s = map_s();
    std::size_t bad = 0;
    for (const auto& p : vq_points()) {
        VarietyPoint dp = dg.apply(p);
        if (!vq_member(dp)) {
            ++bad;
            continue;
        }
        bool ok = db.apply(q.apply(p)) == s.apply(dp) && db.apply(s.apply(p)) == q.apply(dp);
        if (!ok) ++bad;
    }
    return bad;
}

bool duality_exchanges_s_q() { return duality_exchange_failures() == 0; }

// ---- truncated polynomial Hopf check

namespace {

using Exp = std::vector<int>;

struct Truncated {
    std::vector<int> limit;  // xi_i^limit[i] = 0

    bool alive(const Exp& e) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= limit[i]) return false;
        return true;
    }
};

using Elem = std::set<Exp>;
using Tensor = std::set<std::pair<Exp, Exp>>;

template <class S, class T>
void toggle(S& s, const T& x) {
    auto [it, fresh] = s.insert(x);
    if (!fresh) s.erase(it);
}

Exp add_exp(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
    return e;
}

Elem mul(const Truncated& t, const Elem& x, const Elem& y) {
    Elem out;
    for (const auto& a : x)
        for (const auto& b : y) {
            Exp e = add_exp(a, b);
            if (t.alive(e)) toggle(out, e);
        }
    return out;
}

Tensor mul(const Truncated& t, const Tensor& x, const Tensor& y) {
    Tensor out;
    for (const auto& [a1, a2] : x)
        for (const auto& [b1, b2] : y) {
            Exp l = add_exp(a1, b1), r = add_exp(a2, b2);
            if (t.alive(l) && t.alive(r)) toggle(out, std::make_pair(l, r));
        }
    return out;
}

Exp xi_power(std::size_t k, std::size_t j, int e) {
    Exp x(k, 0);
    if (j > 0) x[j - 1] = e;
    return x;
}

std::string show(const Exp& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "xi" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

HopfReport hopf_identity_check(const std::vector<int>& profile) {
    const std::size_t k = profile.size();
    if (k == 0) throw std::invalid_argument("hopf_identity_check: empty profile");
    Truncated t;
    for (int n : profile) {
        if (n < 0 || n > 8) throw std::invalid_argument("hopf_identity_check: profile entries must lie in 0..8");
        t.limit.push_back(1 << n);
    }
    const Exp zero(k, 0);
    const Elem one{zero};

    // psi(xi_j) and chi(xi_j), j = 0..k
    std::vector<Tensor> psi(k + 1);
    std::vector<Elem> chi(k + 1);
    psi[0] = {{zero, zero}};
    chi[0] = one;
    for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            Exp l = xi_power(k, j - i, 1 << i), r = xi_power(k, i, 1);
            if (t.alive(l) && t.alive(r)) toggle(psi[j], std::make_pair(l, r));
        }
        for (std::size_t i = 0; i < j; ++i) {
            Exp l = xi_power(k, j - i, 1 << i);
            if (!t.alive(l)) continue;
            for (const auto& e : mul(t, Elem{l}, chi[i])) toggle(chi[j], e);
        }
    }

    Exp top(k);
    for (std::size_t i = 0; i < k; ++i) top[i] = t.limit[i] - 1;

    Tensor lhs{{zero, zero}};
    for (std::size_t j = 1; j <= k; ++j)
        for (int e = 0; e < top[j - 1]; ++e) lhs = mul(t, lhs, psi[j]);

    auto chi_of = [&](const Exp& r) {
        Elem acc = one;
        for (std::size_t j = 1; j <= k; ++j)
            for (int e = 0; e < r[j - 1]; ++e) acc = mul(t, acc, chi[j]);
        return acc;
    };

    Tensor left, right;
    Exp r1(k, 0);
    while (true) {
        Exp r2(k);
        for (std::size_t i = 0; i < k; ++i) r2[i] = top[i] - r1[i];
        for (const auto& e : chi_of(r1)) toggle(left, std::make_pair(e, r2));
        for (const auto& e : chi_of(r2)) toggle(right, std::make_pair(r1, e));
        std::size_t i = 0;
        while (i < k && ++r1[i] > top[i]) r1[i++] = 0;
        if (i == k) break;
    }

    HopfReport rep;
    rep.left_holds = lhs == left;
    rep.right_holds = lhs == right;
    rep.holds = rep.left_holds && rep.right_holds;
    if (!rep.holds) {
        const Tensor& other = rep.left_holds ? right : left;
        Tensor diff = lhs;
        for (const auto& x : other) toggle(diff, x);
        std::string s;
        std::size_t shown = 0;
        for (const auto& [a, b] : diff) {
            if (shown++ == 6) {
                s += " + ...";
                break;
            }
            if (!s.empty()) s += " + ";
            s += show(a) + " (x) " + show(b);
        }
        rep.difference = s;
    }
    return rep;
}

}  // namespace a2act
