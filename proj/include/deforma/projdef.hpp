#pragma once

#include "deforma/linalg.hpp"
#include "deforma/polyring.hpp"

#include <optional>
#include <string>

namespace deforma {

// n x n rational matrix with exact trace zero, the infinitesimal part
// of a projective linear change of coordinates
struct TracelessMatrix {
    QMatrix entries;

    explicit TracelessMatrix(QMatrix m) : entries(std::move(m)) {
        if (entries.rows() != entries.cols())
            throw std::invalid_argument("sl matrix must be square");
        Rational tr = 0;
        for (std::size_t i = 0; i < entries.rows(); ++i) tr += entries.at(i, i);
        if (tr != 0) throw std::invalid_argument("matrix trace must be zero");
    }

    static TracelessMatrix zero(std::size_t n) { return TracelessMatrix(QMatrix(n, n)); }
};

// delta_M F = sum_{i,j} m_ij x_j dF/dx_i
Polynomial sl_action(const TracelessMatrix& M, const Polynomial& F);

struct TrivialityVerdict {
    bool trivial;
    // trivial: witness with delta_M F + c F = G, re-verified exactly
    std::optional<TracelessMatrix> witness_matrix;
    Rational witness_scalar = 0;
    // nontrivial: residual G - (delta_M F + c F) for the canonical
    // candidate solution, plus the first monomial whose coefficient
    // equation is inconsistent
    std::optional<Polynomial> residual;
    std::optional<Monomial> inconsistent_monomial;
    std::vector<Rational> inconsistency_row;
};

// decides whether G is a first-order projectively trivial perturbation
// of F, i.e. G = delta_M F + c F for some traceless M and scalar c
TrivialityVerdict triviality_test(const Polynomial& F, const Polynomial& G);

// records the implication "nonrigid projective variety gives a
// nonrigid affine cone": any positive h^1(Y, T_Y) propagates
inline bool cone_nonrigid(std::size_t h1_TY_dim) { return h1_TY_dim > 0; }

struct SmoothCurveRow {
    std::size_t dim_T1;
    std::size_t h0_omega_sq;
    bool rigid;
};

// dim T^1 = h^0(omega^2) = 0, 1, 3g-3 for g = 0, 1, >=2
SmoothCurveRow smooth_curve_table(std::size_t g);

}  // namespace deforma
