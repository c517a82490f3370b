#pragma once

#include "a2act/milnor.hpp"
#include "a2act/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace a2act {

// Right-action convention: row = source basis element, column = target.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    Poly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const std::vector<Poly>& entries() const { return entries_; }
    bool is_zero() const;

    PolyMatrix& operator+=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

// Matrix product first * then: apply `first`, then `then`.
PolyMatrix compose(const PolyMatrix& first, const PolyMatrix& then, Reduce reduce = Reduce::None);

// [[m, n], [0, lower]]; m and n share rows, n and lower share columns.
PolyMatrix assemble_block(const PolyMatrix& m, const PolyMatrix& n, const PolyMatrix& lower);

PolyMatrix map_entries(const PolyMatrix& m, const std::function<Poly(const Poly&)>& fn);
PolyMatrix map_entries(const PolyMatrix& m, const SubstMap& s, Reduce reduce = Reduce::None);

// Rows in brackets, entries right-aligned to a common width.
std::string pretty(const PolyMatrix& m, const VarTable& table);

// Sq(i, n) : A_n -> A_{n+i} for 0 <= i, n <= 23 (or the B(2) analogue).
class SqFamily {
public:
    static constexpr int kMax = 23;

    SqFamily() = default;
    explicit SqFamily(BasisPart part);

    BasisPart part() const { return part_; }
    int top() const { return top_degree(part_); }
    std::size_t dim(int n) const;

    const PolyMatrix& sq(int i, int n) const;
    void set(int i, int n, PolyMatrix m);

    SqFamily mapped(const std::function<Poly(const Poly&)>& fn) const;
    SqFamily mapped(const SubstMap& s, Reduce reduce = Reduce::None) const;

    friend bool operator==(const SqFamily&, const SqFamily&) = default;

private:
    BasisPart part_ = BasisPart::Full;
    std::vector<std::vector<PolyMatrix>> m_;
};

}  // namespace a2act
