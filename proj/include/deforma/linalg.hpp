#pragma once

#include "deforma/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace deforma {

// Dense exact rational matrix with the handful of eliminations this
// project needs. Row-major storage.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // in-place row echelon reduction; returns the pivot column of each
    // pivot row, in order (fraction-free not needed; rationals are exact)
    std::vector<std::size_t> row_reduce();

    std::size_t rank() const {
        QMatrix copy = *this;
        return copy.row_reduce().size();
    }

    Rational det() const;

    std::optional<QMatrix> inverse() const;

    QMatrix operator*(const QMatrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Solves A x = b exactly. Free variables are set to zero; pivots are
// chosen left to right so the result is deterministic. Returns nullopt
// together with the index of the first inconsistent reduced row when
// the system has no solution.
struct LinearSolveResult {
    std::optional<std::vector<Rational>> solution;
    // when inconsistent: the reduced row [coeffs | rhs] certifying it
    std::vector<Rational> inconsistency_row;
};
LinearSolveResult solve_linear_system(const QMatrix& A, const std::vector<Rational>& b);

}  // namespace deforma
