#include "deforma/projdef.hpp"

#include <algorithm>
#include <functional>

namespace deforma {
namespace {

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rest) {
        if (i + 1 == n) {
            m.exp[i] = rest;
            out.push_back(m);
            m.exp[i] = 0;
            return;
        }
        for (unsigned e = 0; e <= rest; ++e) {
            m.exp[i] = e;
            rec(i + 1, rest - e);
        }
        m.exp[i] = 0;
    };
    rec(0, d);
    return out;
}

// unknown layout: all m_ij in row-major order except m_nn (eliminated
// through the trace relation), then the scalar c
std::size_t unknown_count(std::size_t n) { return n * n; }  // n^2 - 1 matrix entries + c

QMatrix matrix_from_unknowns(const std::vector<Rational>& u, std::size_t n) {
    QMatrix M(n, n);
    std::size_t k = 0;
    Rational diag_sum = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            M.at(i, j) = u[k++];
            if (i == j) diag_sum += M.at(i, j);
        }
    M.at(n - 1, n - 1) = -diag_sum;
    return M;
}

}  // namespace

Polynomial sl_action(const TracelessMatrix& M, const Polynomial& F) {
    const RingPtr& ring = F.ring();
    std::size_t n = ring->nvars();
    if (M.entries.rows() != n)
        throw std::invalid_argument("matrix shape does not match ring");
    if (!is_homogeneous(F))
        throw std::invalid_argument("sl action needs a homogeneous polynomial");
    Polynomial r(ring);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial dFi = differentiate(F, i);
        if (dFi.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (M.entries.at(i, j) == 0) continue;
            r += Polynomial::variable(ring, j) * dFi * M.entries.at(i, j);
        }
    }
    return r;
}

TrivialityVerdict triviality_test(const Polynomial& F, const Polynomial& G) {
    const RingPtr& ring = F.ring();
    check_same_ring(ring, G.ring());
    std::size_t n = ring->nvars();
    if (F.is_zero()) throw std::invalid_argument("F must be nonzero");
    auto hF = is_homogeneous(F);
    auto hG = is_homogeneous(G);
    if (!hF || !hG)
        throw std::invalid_argument("triviality test needs homogeneous inputs");
    if (!G.is_zero() && hF->degree != hG->degree)
        throw std::invalid_argument("F and G must have the same degree");

    unsigned d = hF->degree;
    std::vector<Monomial> rows = monomials_of_degree(n, d);
    MonomialOrdering ord = MonomialOrdering::global();
    std::sort(rows.begin(), rows.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });

    // column k: coefficients of delta_{basis matrix k} F (diagonal
    // unknowns act through E_ii - E_nn); last column: F itself (for c)
    std::size_t ncols = unknown_count(n);
    std::vector<Polynomial> columns;
    columns.reserve(ncols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            QMatrix E(n, n);
            E.at(i, j) = 1;
            if (i == j) E.at(n - 1, n - 1) = -1;
            columns.push_back(sl_action(TracelessMatrix(std::move(E)), F));
        }
    columns.push_back(F);

    // assemble rows greedily in degrevlex order; rows that break
    // consistency identify the offending monomials of G
    QMatrix A(0, 0);
    std::vector<Rational> b;
    std::vector<std::vector<Rational>> kept;
    std::optional<Monomial> first_bad;
    std::vector<Rational> bad_row;
    for (const Monomial& m : rows) {
        std::vector<Rational> row(ncols + 1);
        for (std::size_t c = 0; c < ncols; ++c) row[c] = columns[c].coeff(m);
        row[ncols] = G.coeff(m);
        kept.push_back(row);
        QMatrix trial(kept.size(), ncols);
        std::vector<Rational> rhs(kept.size());
        for (std::size_t r = 0; r < kept.size(); ++r) {
            for (std::size_t c = 0; c < ncols; ++c) trial.at(r, c) = kept[r][c];
            rhs[r] = kept[r][ncols];
        }
        auto res = solve_linear_system(trial, rhs);
        if (!res.solution) {
            if (!first_bad) {
                first_bad = m;
                bad_row = res.inconsistency_row;
            }
            kept.pop_back();
        }
    }

    QMatrix Afin(kept.size(), ncols);
    std::vector<Rational> bfin(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        for (std::size_t c = 0; c < ncols; ++c) Afin.at(r, c) = kept[r][c];
        bfin[r] = kept[r][ncols];
    }
    auto res = solve_linear_system(Afin, bfin);
    std::vector<Rational> u = *res.solution;
    Rational c_val = u.back();
    u.pop_back();
    TracelessMatrix M(matrix_from_unknowns(u, n));
    Polynomial reached = sl_action(M, F) + F * c_val;

    TrivialityVerdict v{false, std::nullopt, 0, std::nullopt, std::nullopt, {}};
    if (!first_bad) {
        if (reached != G)
            throw std::logic_error("triviality witness failed re-verification");
        v.trivial = true;
        v.witness_matrix = std::move(M);
        v.witness_scalar = c_val;
        return v;
    }
    Polynomial residual = G - reached;
    if (residual.is_zero())
        throw std::logic_error("inconsistent system produced a zero residual");
    v.residual = std::move(residual);
    v.inconsistent_monomial = first_bad;
    v.inconsistency_row = std::move(bad_row);
    return v;
}

SmoothCurveRow smooth_curve_table(std::size_t g) {
    std::size_t dim = g == 0 ? 0 : (g == 1 ? 1 : 3 * g - 3);
    return {dim, dim, g == 0};
}

}  // namespace deforma
