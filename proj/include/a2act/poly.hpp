#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace a2act {

// Variable index into a VarTable. A larger index means higher elimination
// precedence, so pivots are always the largest index in a relation.
using Var = std::uint16_t;

class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Var v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Var> find(std::string_view name) const;
    Var at(std::string_view name) const;  // throws on unknown name

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Var> index_;
};

// Sorted multiset of variables. Repeats are kept until boolean_nf.
class Monomial {
public:
    using Storage = boost::container::small_vector<Var, 6>;

    Monomial() = default;
    explicit Monomial(Storage vars);
    static Monomial var(Var v) { return Monomial(Storage{v}); }

    const Storage& vars() const { return vars_; }
    std::size_t degree() const { return vars_.size(); }
    bool is_one() const { return vars_.empty(); }
    bool contains(Var v) const;
    bool squarefree() const;
    Monomial squarefree_part() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Storage vars_;
};

// Display order: larger degree first, then by highest variable.
bool monomial_before(const Monomial& a, const Monomial& b);

// XOR-set of monomials, kept sorted by monomial_before.
class Poly {
public:
    Poly() = default;
    static Poly zero() { return {}; }
    static Poly one();
    static Poly var(Var v);
    static Poly constant(bool c) { return c ? one() : zero(); }
    static Poly from_terms(std::vector<Monomial> terms);  // cancels pairs

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    bool is_constant() const { return terms_.empty() || is_one(); }
    std::size_t degree() const;  // 0 for the zero polynomial
    std::size_t size() const { return terms_.size(); }
    bool has_term(const Monomial& m) const;
    bool has_constant() const { return !terms_.empty() && terms_.back().is_one(); }
    bool mentions(Var v) const;
    std::vector<Var> variables() const;

    Poly& operator+=(const Poly& q);
    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator*(const Poly& p, const Poly& q);

    friend bool operator==(const Poly&, const Poly&) = default;
    // Arbitrary but fixed total order, used for sets and deterministic output.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    std::vector<Monomial> terms_;
};

struct PolyHash {
    std::size_t operator()(const Poly& p) const;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly boolean_nf(const Poly& p);
// Product followed by x^2 = x reduction, without forming the squares.
Poly boolean_mul(const Poly& p, const Poly& q);

// Evaluation at an F2 point; assignment[v] must be 0 or 1 for every v in p.
bool evaluate(const Poly& p, std::span<const std::uint8_t> assignment);
bool evaluate(const Poly& p, const std::function<bool(Var)>& value);

// Text form "a1*a2 + a13 + 1". Factors print in ascending table order.
std::string format(const Poly& p, const VarTable& table);
std::string format(const Monomial& m, const VarTable& table);
// Accepts '+', '*', '^k', whitespace, and the constants 0 and 1.
Poly parse_poly(std::string_view text, const VarTable& table);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total map variable -> polynomial.
class SubstMap {
public:
    SubstMap() = default;
    static SubstMap identity(std::size_t nvars);

    std::size_t size() const { return images_.size(); }
    const Poly& operator[](Var v) const { return images_.at(v); }
    void set(Var v, Poly image) { images_.at(v) = std::move(image); }
    const std::vector<Poly>& images() const { return images_; }
    bool is_identity_on(Var v) const;

    friend bool operator==(const SubstMap&, const SubstMap&) = default;

private:
    std::vector<Poly> images_;
};

enum class Reduce { None, Boolean };

Poly substitute(const Poly& p, const SubstMap& m, Reduce reduce = Reduce::None);
// (then o first): v -> substitute(first[v], then).
SubstMap compose(const SubstMap& first, const SubstMap& then, Reduce reduce = Reduce::None);
// Iterates m <- m o m until stable; throws std::runtime_error past max_rounds.
SubstMap close_idempotent(const SubstMap& m, int max_rounds = 64);

// v occurs as a degree-one term of r and in no term of higher degree.
bool safe(Var v, const Poly& r);

// Reduced row echelon form of degree <= 1 relations. Each row has a distinct
// leading (highest) variable absent from every other row.
class LinearBasis {
public:
    LinearBasis() = default;
    LinearBasis(std::size_t nvars, const std::vector<Poly>& relations);

    std::size_t size() const { return rows_.size(); }
    const std::vector<Poly>& rows() const { return rows_; }    // by descending pivot
    const std::vector<Var>& pivots() const { return pivots_; }  // descending
    bool inconsistent() const { return inconsistent_; }
    bool is_pivot(Var v) const;
    // pivot -> row + pivot, identity elsewhere.
    const SubstMap& as_map() const { return map_; }

private:
    std::vector<Poly> rows_;
    std::vector<Var> pivots_;
    bool inconsistent_ = false;
    SubstMap map_;
};

// Throws std::invalid_argument on a relation of degree > 1.
LinearBasis linear_rref(std::size_t nvars, const std::vector<Poly>& relations);
Poly nf_linear(const Poly& p, const LinearBasis& basis);

}  // namespace a2act
