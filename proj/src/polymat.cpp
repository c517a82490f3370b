#include "a2act/polymat.hpp"

#include <algorithm>
#include <stdexcept>

namespace a2act {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix +: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

PolyMatrix compose(const PolyMatrix& first, const PolyMatrix& then, Reduce reduce) {
    if (first.cols() != then.rows())
        throw std::invalid_argument("compose: shape mismatch " + std::to_string(first.rows()) + "x" +
                                    std::to_string(first.cols()) + " then " + std::to_string(then.rows()) + "x" +
                                    std::to_string(then.cols()));
    PolyMatrix out(first.rows(), then.cols());
    for (std::size_t r = 0; r < first.rows(); ++r) {
        for (std::size_t c = 0; c < then.cols(); ++c) {
            Poly acc;
            for (std::size_t k = 0; k < first.cols(); ++k) {
                const Poly& x = first.at(r, k);
                if (x.is_zero()) continue;
                const Poly& y = then.at(k, c);
                if (y.is_zero()) continue;
                acc += reduce == Reduce::Boolean ? boolean_mul(x, y) : x * y;
            }
            out.at(r, c) = std::move(acc);
        }
    }
    return out;
}

PolyMatrix assemble_block(const PolyMatrix& m, const PolyMatrix& n, const PolyMatrix& lower) {
    if (m.rows() != n.rows() || n.cols() != lower.cols())
        throw std::invalid_argument("assemble_block: shape mismatch");
    PolyMatrix out(m.rows() + lower.rows(), m.cols() + n.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
        for (std::size_t c = 0; c < n.cols(); ++c) out.at(r, m.cols() + c) = n.at(r, c);
    }
    for (std::size_t r = 0; r < lower.rows(); ++r)
        for (std::size_t c = 0; c < lower.cols(); ++c) out.at(m.rows() + r, m.cols() + c) = lower.at(r, c);
    return out;
}

PolyMatrix map_entries(const PolyMatrix& m, const std::function<Poly(const Poly&)>& fn) {
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = fn(m.at(r, c));
    return out;
}

PolyMatrix map_entries(const PolyMatrix& m, const SubstMap& s, Reduce reduce) {
    return map_entries(m, [&](const Poly& p) { return substitute(p, s, reduce); });
}

std::string pretty(const PolyMatrix& m, const VarTable& table) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (const auto& p : m.entries()) {
        cells.push_back(format(p, table));
        width = std::max(width, cells.back().size());
    }
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& s = cells[r * m.cols() + c];
            if (c) out += ' ';
            out += std::string(width - s.size(), ' ') + s;
        }
        out += "]\n";
    }
    return out;
}

SqFamily::SqFamily(BasisPart part) : part_(part), m_(kMax + 1) {
    for (int i = 0; i <= kMax; ++i) {
        m_[i].reserve(kMax + 1);
        for (int n = 0; n <= kMax; ++n) m_[i].emplace_back(dim(n), dim(n + i));
    }
    for (int n = 0; n <= kMax; ++n) m_[0][n] = PolyMatrix::identity(dim(n));
}

std::size_t SqFamily::dim(int n) const { return basis(n, part_).size(); }

const PolyMatrix& SqFamily::sq(int i, int n) const {
    if (i < 0 || i > kMax || n < 0 || n > kMax) throw std::out_of_range("SqFamily::sq index");
    return m_[i][n];
}

void SqFamily::set(int i, int n, PolyMatrix m) {
    if (i < 0 || i > kMax || n < 0 || n > kMax) throw std::out_of_range("SqFamily::set index");
    if (m.rows() != dim(n) || m.cols() != dim(n + i)) throw std::invalid_argument("SqFamily::set: shape mismatch");
    m_[i][n] = std::move(m);
}

SqFamily SqFamily::mapped(const std::function<Poly(const Poly&)>& fn) const {
    SqFamily out = *this;
    for (auto& row : out.m_)
        for (auto& m : row) m = map_entries(m, fn);
    return out;
}

SqFamily SqFamily::mapped(const SubstMap& s, Reduce reduce) const {
    return mapped([&](const Poly& p) { return substitute(p, s, reduce); });
}

}  // namespace a2act
