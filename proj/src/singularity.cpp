#include "deforma/singularity.hpp"

#include "deforma/linalg.hpp"

#include <numeric>

namespace deforma {
namespace {

void check_common_ring(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty equation list");
    for (const auto& f : fs) check_same_ring(fs[0].ring(), f.ring());
}

void check_on_variety(const std::vector<Polynomial>& fs, const PointSpec& p) {
    for (const auto& f : fs)
        if (f.evaluate(p.coordinates) != 0)
            throw PointNotOnVarietyError("point does not lie on the variety");
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return m[0][0];
    // cofactor expansion along the first row; fine at the sizes in scope
    Polynomial det(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * poly_det(sub, ring);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

T1Result result_from_quotient(const QuotientDimension& q, const StandardBasis& B) {
    T1Result r;
    if (q.finite()) {
        if (q.value == 0) {
            r.verdict = T1Result::Verdict::Smooth;
        } else {
            r.verdict = T1Result::Verdict::IsolatedSingular;
            r.tau = q.value;
            r.basis = standard_monomials(B);
        }
    } else {
        r.verdict = T1Result::Verdict::NonIsolated;
        r.sing_locus_dim = q.value;
    }
    return r;
}

}  // namespace

JacobianMatrix jacobian(const std::vector<Polynomial>& fs) {
    check_common_ring(fs);
    std::size_t n = fs[0].ring()->nvars();
    JacobianMatrix J{fs.size(), n, {}};
    J.entries.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(differentiate(f, j));
        J.entries.push_back(std::move(row));
    }
    return J;
}

Ideal minors(const JacobianMatrix& J, std::size_t size) {
    const RingPtr& ring = J.entries.at(0).at(0).ring();
    if (size > J.cols || size > J.rows) return Ideal(ring, {});
    std::vector<Polynomial> gens;
    // iterate over row and column subsets of the given size
    std::vector<std::size_t> rows(size), cols(size);
    std::iota(rows.begin(), rows.end(), 0);
    auto next_subset = [](std::vector<std::size_t>& s, std::size_t limit) {
        std::size_t k = s.size();
        for (std::size_t i = k; i-- > 0;) {
            if (s[i] + 1 <= limit - (k - i)) {
                ++s[i];
                for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            std::vector<std::vector<Polynomial>> sub(size, std::vector<Polynomial>());
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t c = 0; c < size; ++c)
                    sub[r].push_back(J.entries[rows[r]][cols[c]]);
            Polynomial d = poly_det(sub, ring);
            if (!d.is_zero()) gens.push_back(std::move(d));
        } while (next_subset(cols, J.cols));
    } while (next_subset(rows, J.rows));
    return Ideal(ring, std::move(gens));
}

Ideal singular_locus_ideal(const std::vector<Polynomial>& fs) {
    check_common_ring(fs);
    JacobianMatrix J = jacobian(fs);
    Ideal m = minors(J, fs.size());
    std::vector<Polynomial> gens = fs;
    for (auto& g : m.generators) gens.push_back(std::move(g));
    return Ideal(fs[0].ring(), std::move(gens));
}

T1Result tjurina_hypersurface(const Polynomial& f, const PointSpec& p,
                              const ResourceLimits& limits) {
    check_on_variety({f}, p);
    Polynomial g = p.is_origin() ? f : translate(f, p.coordinates);
    const RingPtr& ring = g.ring();
    std::vector<Polynomial> gens{g};
    for (std::size_t j = 0; j < ring->nvars(); ++j) gens.push_back(differentiate(g, j));
    StandardBasis B = standard_basis(Ideal(ring, std::move(gens)),
                                     MonomialOrdering::local(), limits);
    return result_from_quotient(quotient_dimension(B), B);
}

QuotientDimension milnor_number(const Polynomial& f, const PointSpec& p,
                                const ResourceLimits& limits) {
    check_on_variety({f}, p);
    Polynomial g = p.is_origin() ? f : translate(f, p.coordinates);
    const RingPtr& ring = g.ring();
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < ring->nvars(); ++j) gens.push_back(differentiate(g, j));
    StandardBasis B = standard_basis(Ideal(ring, std::move(gens)),
                                     MonomialOrdering::local(), limits);
    return quotient_dimension(B);
}

T1Result t1_ci_dimension(const std::vector<Polynomial>& fs, const PointSpec& p,
                         const ResourceLimits& limits) {
    check_common_ring(fs);
    const RingPtr& ring = fs[0].ring();
    std::size_t r = fs.size(), n = ring->nvars();
    if (r > n) throw std::invalid_argument("more equations than variables is not a complete intersection");
    check_on_variety(fs, p);
    if (r == 1) return tjurina_hypersurface(fs[0], p, limits);

    std::vector<Polynomial> local_fs;
    local_fs.reserve(r);
    for (const auto& f : fs)
        local_fs.push_back(p.is_origin() ? f : translate(f, p.coordinates));

    // cheap regular-sequence sanity check: no equation may already lie
    // in the (localized) ideal of the earlier ones
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<Polynomial> prefix(local_fs.begin(), local_fs.begin() + i);
        StandardBasis Bi = standard_basis(Ideal(ring, prefix),
                                          MonomialOrdering::local(), limits);
        if (normal_form(local_fs[i], Bi, limits).is_zero())
            throw std::invalid_argument("equations are not a regular sequence: f_" +
                                        std::to_string(i + 1) +
                                        " lies in the ideal of the earlier ones");
    }

    JacobianMatrix J = jacobian(local_fs);
    std::vector<ModuleElement> gens;
    for (std::size_t j = 0; j < n; ++j) {
        ModuleElement col(ring, r);
        for (std::size_t i = 0; i < r; ++i) col.component(i) = J.entries[i][j];
        if (!col.is_zero()) gens.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < r; ++l)
            gens.push_back(ModuleElement::unit(ring, r, l, local_fs[i]));

    StandardBasis B = standard_basis(ring, r, std::move(gens),
                                     MonomialOrdering::local(), limits);
    return result_from_quotient(quotient_dimension(B), B);
}

ClassifyReport classify_point(const std::vector<Polynomial>& fs, const PointSpec& p,
                              const ResourceLimits& limits) {
    check_common_ring(fs);
    ClassifyReport report;
    for (const auto& f : fs)
        if (f.evaluate(p.coordinates) != 0) report.on_variety = false;

    JacobianMatrix J = jacobian(fs);
    QMatrix Jp(J.rows, J.cols);
    for (std::size_t i = 0; i < J.rows; ++i)
        for (std::size_t j = 0; j < J.cols; ++j)
            Jp.at(i, j) = J.entries[i][j].evaluate(p.coordinates);
    report.jacobian_rank_at_p = Jp.rank();

    Ideal sing = singular_locus_ideal(fs);
    report.sing_locus_generators = sing.generators;

    if (report.on_variety) report.t1 = t1_ci_dimension(fs, p, limits);
    return report;
}

}  // namespace deforma
