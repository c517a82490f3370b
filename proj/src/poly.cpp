#include "a2act/poly.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace a2act {

// ---- VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 0xFFFF) throw std::invalid_argument("VarTable: too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<Var>(i)).second)
            throw std::invalid_argument("VarTable: duplicate name " + names_[i]);
    }
}

std::optional<Var> VarTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Var VarTable::at(std::string_view name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown variable " + std::string(name));
    return *v;
}

// ---- Monomial

Monomial::Monomial(Storage vars) : vars_(std::move(vars)) { std::sort(vars_.begin(), vars_.end()); }

bool Monomial::contains(Var v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

bool Monomial::squarefree() const { return std::adjacent_find(vars_.begin(), vars_.end()) == vars_.end(); }

Monomial Monomial::squarefree_part() const {
    Monomial m;
    m.vars_ = vars_;
    m.vars_.erase(std::unique(m.vars_.begin(), m.vars_.end()), m.vars_.end());
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.vars_.resize(a.vars_.size() + b.vars_.size());
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), m.vars_.begin());
    return m;
}

bool monomial_before(const Monomial& a, const Monomial& b) {
    const auto& x = a.vars();
    const auto& y = b.vars();
    if (x.size() != y.size()) return x.size() > y.size();
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
}

// ---- Poly

namespace {

void sort_and_cancel(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), monomial_before);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) terms[out++] = std::move(terms[i]);
        i = j;
    }
    terms.resize(out);
}

Monomial boolean_product(const Monomial& a, const Monomial& b) {
    Monomial::Storage s;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::back_inserter(s));
    return Monomial(std::move(s));
}

}  // namespace

Poly Poly::one() {
    Poly p;
    p.terms_.emplace_back();
    return p;
}

Poly Poly::var(Var v) {
    Poly p;
    p.terms_.push_back(Monomial::var(v));
    return p;
}

Poly Poly::from_terms(std::vector<Monomial> terms) {
    sort_and_cancel(terms);
    Poly p;
    p.terms_ = std::move(terms);
    return p;
}

std::size_t Poly::degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

bool Poly::has_term(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, monomial_before);
}

bool Poly::mentions(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Monomial& m) { return m.contains(v); });
}

std::vector<Var> Poly::variables() const {
    std::vector<Var> out;
    for (const auto& m : terms_) out.insert(out.end(), m.vars().begin(), m.vars().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly& Poly::operator+=(const Poly& q) {
    if (q.terms_.empty()) return *this;
    std::vector<Monomial> out;
    out.reserve(terms_.size() + q.terms_.size());
    auto a = terms_.begin();
    auto b = q.terms_.begin();
    while (a != terms_.end() && b != q.terms_.end()) {
        if (monomial_before(*a, *b)) {
            out.push_back(std::move(*a++));
        } else if (monomial_before(*b, *a)) {
            out.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
    for (; b != q.terms_.end(); ++b) out.push_back(*b);
    terms_ = std::move(out);
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (p.is_one()) return q;
    if (q.is_one()) return p;
    std::vector<Monomial> terms;
    terms.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) terms.push_back(a * b);
    return Poly::from_terms(std::move(terms));
}

bool operator<(const Poly& a, const Poly& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        monomial_before);
}

std::size_t PolyHash::operator()(const Poly& p) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& m : p.terms()) {
        for (Var v : m.vars()) h = (h ^ v) * 1099511628211ull;
        h = (h ^ 0xFFFFu) * 1099511628211ull;
    }
    return h;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly boolean_nf(const Poly& p) {
    std::vector<Monomial> terms;
    terms.reserve(p.size());
    for (const auto& m : p.terms()) terms.push_back(m.squarefree_part());
    return Poly::from_terms(std::move(terms));
}

Poly boolean_mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Monomial> terms;
    terms.reserve(p.size() * q.size());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) terms.push_back(boolean_product(a, b));
    return Poly::from_terms(std::move(terms));
}

bool evaluate(const Poly& p, const std::function<bool(Var)>& value) {
    bool acc = false;
    for (const auto& m : p.terms()) {
        bool t = true;
        for (Var v : m.vars()) {
            if (!value(v)) {
                t = false;
                break;
            }
        }
        acc ^= t;
    }
    return acc;
}

bool evaluate(const Poly& p, std::span<const std::uint8_t> assignment) {
    return evaluate(p, [&](Var v) -> bool {
        if (v >= assignment.size() || assignment[v] > 1)
            throw std::invalid_argument("evaluate: variable " + std::to_string(v) + " unassigned");
        return assignment[v] == 1;
    });
}

// ---- text

std::string format(const Monomial& m, const VarTable& table) {
    if (m.is_one()) return "1";
    std::string s;
    const auto& vs = m.vars();
    for (std::size_t i = 0; i < vs.size();) {
        std::size_t j = i;
        while (j < vs.size() && vs[j] == vs[i]) ++j;
        if (!s.empty()) s += '*';
        s += table.name(vs[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string format(const Poly& p, const VarTable& table) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& m : p.terms()) {
        if (!s.empty()) s += " + ";
        s += format(m, table);
    }
    return s;
}

Poly parse_poly(std::string_view text, const VarTable& table) {
    std::vector<Monomial> terms;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw ParseError("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    skip();
    if (pos == text.size()) fail("empty input");
    while (true) {
        Monomial::Storage vars;
        bool zero = false;
        while (true) {
            skip();
            std::size_t start = pos;
            while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected factor");
            std::string_view tok = text.substr(start, pos - start);
            int power = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                std::size_t ps = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (ps == pos) fail("expected exponent");
                power = std::stoi(std::string(text.substr(ps, pos - ps)));
            }
            if (tok == "1") {
            } else if (tok == "0") {
                zero = true;
            } else {
                auto v = table.find(tok);
                if (!v) fail("unknown variable '" + std::string(tok) + "'");
                for (int k = 0; k < power; ++k) vars.push_back(*v);
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!zero) terms.emplace_back(std::move(vars));
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return Poly::from_terms(std::move(terms));
}

// ---- substitution

SubstMap SubstMap::identity(std::size_t nvars) {
    SubstMap m;
    m.images_.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v) m.images_.push_back(Poly::var(static_cast<Var>(v)));
    return m;
}

bool SubstMap::is_identity_on(Var v) const { return images_.at(v) == Poly::var(v); }

Poly substitute(const Poly& p, const SubstMap& m, Reduce reduce) {
    std::vector<Monomial> terms;
    for (const auto& mono : p.terms()) {
        Poly prod = Poly::one();
        const auto src = reduce == Reduce::Boolean ? mono.squarefree_part() : mono;
        for (Var v : src.vars()) {
            prod = reduce == Reduce::Boolean ? boolean_mul(prod, m[v]) : prod * m[v];
            if (prod.is_zero()) break;
        }
        terms.insert(terms.end(), prod.terms().begin(), prod.terms().end());
    }
    return Poly::from_terms(std::move(terms));
}

SubstMap compose(const SubstMap& first, const SubstMap& then, Reduce reduce) {
    SubstMap out = first;
    for (std::size_t v = 0; v < first.size(); ++v)
        out.set(static_cast<Var>(v), substitute(first[static_cast<Var>(v)], then, reduce));
    return out;
}

SubstMap close_idempotent(const SubstMap& m, int max_rounds) {
    SubstMap cur = m;
    for (int round = 0; round < max_rounds; ++round) {
        SubstMap next = compose(cur, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw std::runtime_error("close_idempotent: map did not stabilize");
}

bool safe(Var v, const Poly& r) {
    bool term = false;
    for (const auto& m : r.terms()) {
        if (m.degree() == 1 && m.vars()[0] == v) term = true;
        else if (m.degree() > 1 && m.contains(v)) return false;
    }
    return term;
}

// ---- linear algebra

namespace {

// Bit layout: position nvars-1-v for variable v, position nvars for the
// constant, so find_first() yields the highest-precedence variable.
using Row = boost::dynamic_bitset<std::uint64_t>;

Row to_row(const Poly& p, std::size_t nvars) {
    if (p.degree() > 1) throw std::invalid_argument("linear_rref: relation of degree > 1");
    Row r(nvars + 1);
    for (const auto& m : p.terms()) {
        if (m.is_one()) r.flip(nvars);
        else r.flip(nvars - 1 - m.vars()[0]);
    }
    return r;
}

Poly from_row(const Row& r, std::size_t nvars) {
    std::vector<Monomial> terms;
    for (auto i = r.find_first(); i != Row::npos; i = r.find_next(i)) {
        if (i == nvars) terms.emplace_back();
        else terms.push_back(Monomial::var(static_cast<Var>(nvars - 1 - i)));
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace

LinearBasis::LinearBasis(std::size_t nvars, const std::vector<Poly>& relations) {
    std::map<std::size_t, Row> rows;  // leading position -> row
    for (const auto& rel : relations) {
        Row r = to_row(rel, nvars);
        std::vector<std::size_t> hits;
        for (auto i = r.find_first(); i != Row::npos; i = r.find_next(i))
            if (rows.count(i)) hits.push_back(i);
        for (auto i : hits) r ^= rows.at(i);
        auto lead = r.find_first();
        if (lead == Row::npos) continue;
        for (auto& [pos, row] : rows)
            if (row.test(lead)) row ^= r;
        rows.emplace(lead, std::move(r));
    }
    map_ = SubstMap::identity(nvars);
    for (const auto& [pos, row] : rows) {
        if (pos == nvars) {
            inconsistent_ = true;
            continue;
        }
        Var v = static_cast<Var>(nvars - 1 - pos);
        Poly p = from_row(row, nvars);
        pivots_.push_back(v);
        map_.set(v, p + Poly::var(v));
        rows_.push_back(std::move(p));
    }
    if (inconsistent_) rows_.push_back(Poly::one());
}

bool LinearBasis::is_pivot(Var v) const { return std::find(pivots_.begin(), pivots_.end(), v) != pivots_.end(); }

LinearBasis linear_rref(std::size_t nvars, const std::vector<Poly>& relations) { return LinearBasis(nvars, relations); }

Poly nf_linear(const Poly& p, const LinearBasis& basis) { return substitute(p, basis.as_map()); }

}  // namespace a2act
