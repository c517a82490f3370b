#pragma once

#include "a2act/milnor.hpp"
#include "a2act/pipeline.hpp"
#include "a2act/variety.hpp"

#include <string>
#include <vector>

namespace a2act {

// chi(Sq^a) for a <= 16, computed by the convolution recursion from Sq^a.
// Entries are boolean-normal.
SqFamily antipode_family(const SqFamily& family);

// Complement against (7,3,1), or (7,3) when part is B.
MilnorExponent theta(const MilnorExponent& r, BasisPart part = BasisPart::Full);

// Where a free coordinate lives: coefficient of Sq(y) in Sq^i . Sq(x).
struct CoeffSpec {
    std::string name;
    int i;
    MilnorExponent x;
    MilnorExponent y;
};
const std::vector<CoeffSpec>& coeff_table(ActionCase c);

struct DualityMap {
    ActionCase action_case = ActionCase::Symmetric;
    VarietyDesc variety;
    std::vector<Poly> images;  // one per coordinate of `variety`

    VarietyPoint apply(const VarietyPoint& p) const;
};

DualityMap dual_coordinate_map(ActionCase c);
// Memoized.
const DualityMap& duality(ActionCase c);

VarietyPoint dual_point(const DualityMap& d, const VarietyPoint& p);  // throws off the variety
std::vector<VarietyPoint> self_dual_points(ActionCase c);

// D_B(q(p)) = s(D_gen(p)) and D_B(s(p)) = q(D_gen(p)) for every p in V_Q.
// Returns the number of failing points (0 when the identities hold).
std::size_t duality_exchange_failures();
bool duality_exchanges_s_q();

struct HopfReport {
    bool holds = false;
    bool left_holds = false;   // psi(top) = sum chi(xi(R')) (x) xi(R'')
    bool right_holds = false;  // psi(top) = sum xi(R') (x) chi(xi(R''))
    std::string difference;    // first offending tensor difference, if any
};

// Profile (n1,...,nk) defines F2[xi_1..xi_k]/(xi_i^(2^n_i)).
HopfReport hopf_identity_check(const std::vector<int>& profile);

}  // namespace a2act
