#include "deforma/linalg.hpp"

#include <stdexcept>

namespace deforma {

std::vector<std::size_t> QMatrix::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if (at(r, col) != 0) { sel = r; break; }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
        Rational inv = Rational(1) / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rational factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Rational QMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    QMatrix m = *this;
    Rational d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = col; r < rows_; ++r)
            if (m.at(r, col) != 0) { sel = r; break; }
        if (sel == rows_) return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(col, c));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational factor = m.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return d;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = rows_;
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto pivots = aug.row_reduce();
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

LinearSolveResult solve_linear_system(const QMatrix& A, const std::vector<Rational>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("rhs size mismatch");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    auto pivots = aug.row_reduce();
    // a pivot in the rhs column means inconsistency
    if (!pivots.empty() && pivots.back() == A.cols()) {
        std::size_t bad = pivots.size() - 1;
        std::vector<Rational> row(A.cols() + 1);
        for (std::size_t c = 0; c <= A.cols(); ++c) row[c] = aug.at(bad, c);
        return {std::nullopt, row};
    }
    std::vector<Rational> x(A.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, A.cols());
    return {x, {}};
}

}  // namespace deforma
