#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace a2act {

// Exponent triple of a Milnor basis element Sq(r1,r2,r3) of A(2).
// B(2) elements are the ones with r3 == 0.
struct MilnorExponent {
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;

    int degree() const { return r1 + 3 * r2 + 7 * r3; }
    bool in_range() const { return r1 >= 0 && r1 <= 7 && r2 >= 0 && r2 <= 3 && r3 >= 0 && r3 <= 1; }
    std::string str() const;

    auto operator<=>(const MilnorExponent&) const = default;
};

enum class BasisPart { Full, B, Q };

// Ordered basis of A(2) (or of the B / Q2-multiple parts) in a given degree.
// Order: B part by ascending r2, then Q part by ascending r2.
std::vector<MilnorExponent> basis(int degree, BasisPart part = BasisPart::Full);

// Position of e in basis(e.degree(), part); nullopt if absent.
std::optional<std::size_t> basis_index(const MilnorExponent& e, BasisPart part = BasisPart::Full);

// Top degree of the algebra: 23 for A(2), 16 for B(2).
int top_degree(BasisPart part);
std::size_t algebra_dimension(BasisPart part);

// C(m, n) mod 2 by Lucas; zero when n > m or either is negative.
bool binom_mod2(int m, int n);

// Sq^a * Sq(r) for 0 <= a <= 7, written in the Milnor basis. Terms appear once
// (mod 2 accumulation); the result is sorted.
std::vector<MilnorExponent> sq_act(int a, const MilnorExponent& r);

// Same as sq_act but returns every raw term before cancellation.
std::vector<MilnorExponent> sq_act_terms(int a, const MilnorExponent& r);

// Q2 * Sq(r1,r2,r3): Sq(r1,r2,1) when r3 == 0, zero otherwise.
std::optional<MilnorExponent> q2_mult(const MilnorExponent& r);

}  // namespace a2act
