#include "a2act/milnor.hpp"

#include <algorithm>
#include <stdexcept>

namespace a2act {

std::string MilnorExponent::str() const {
    return "Sq(" + std::to_string(r1) + "," + std::to_string(r2) + "," + std::to_string(r3) + ")";
}

std::vector<MilnorExponent> basis(int degree, BasisPart part) {
    std::vector<MilnorExponent> out;
    if (part != BasisPart::Q) {
        for (int j = 0; j <= 3; ++j) {
            int r1 = degree - 3 * j;
            if (r1 >= 0 && r1 <= 7) out.push_back({r1, j, 0});
        }
    }
    if (part != BasisPart::B) {
        for (int j = 0; j <= 3; ++j) {
            int r1 = degree - 3 * j - 7;
            if (r1 >= 0 && r1 <= 7) out.push_back({r1, j, 1});
        }
    }
    return out;
}

std::optional<std::size_t> basis_index(const MilnorExponent& e, BasisPart part) {
    auto b = basis(e.degree(), part);
    auto it = std::find(b.begin(), b.end(), e);
    if (it == b.end()) return std::nullopt;
    return static_cast<std::size_t>(it - b.begin());
}

int top_degree(BasisPart part) { return part == BasisPart::B ? 16 : 23; }

std::size_t algebra_dimension(BasisPart part) {
    std::size_t n = 0;
    for (int d = 0; d <= 23; ++d) n += basis(d, part).size();
    return n;
}

bool binom_mod2(int m, int n) {
    if (m < 0 || n < 0 || n > m) return false;
    return (n & ~m) == 0;
}

std::vector<MilnorExponent> sq_act_terms(int a, const MilnorExponent& r) {
    if (a < 0 || a > 7) throw std::invalid_argument("sq_act: generator degree out of range");
    if (!r.in_range()) throw std::invalid_argument("sq_act: exponent out of range");
    std::vector<MilnorExponent> terms;
    for (int j = 0; j <= std::min(r.r2, a / 4); ++j) {
        for (int i = 0; i <= std::min(r.r1, (a - 4 * j) / 2); ++i) {
            if (a - 2 * i - 4 * j < 0) continue;
            int t1 = a + r.r1 - 3 * i - 4 * j;
            int t2 = r.r2 + i - j;
            int t3 = r.r3 + j;
            if (binom_mod2(t1, r.r1 - i) && binom_mod2(t2, i) && binom_mod2(t3, j))
                terms.push_back({t1, t2, t3});
        }
    }
    return terms;
}

std::vector<MilnorExponent> sq_act(int a, const MilnorExponent& r) {
    auto terms = sq_act_terms(a, r);
    std::sort(terms.begin(), terms.end());
    std::vector<MilnorExponent> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

std::optional<MilnorExponent> q2_mult(const MilnorExponent& r) {
    if (r.r3 != 0) return std::nullopt;
    return MilnorExponent{r.r1, r.r2, 1};
}

}  // namespace a2act
