#pragma once

// Brute-force Macaulay-truncation oracles used to pin expected quotient
// dimensions independently of the standard-basis engine. Everything here
// is plain linear algebra on monomials: enumerate the monomials below a
// degree cutoff, row-reduce the matrix of truncated generator multiples,
// and count the non-pivot monomials. When two consecutive cutoffs agree
// the count is certified for m-primary ideals (Nakayama).

#include "deforma/linalg.hpp"
#include "deforma/polyring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace deforma::oracle {

inline std::vector<Monomial> monomials_below(std::size_t n, unsigned cutoff) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rest) {
        if (i == n) {
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= rest; ++e) {
            m.exp[i] = e;
            rec(i + 1, rest - e);
        }
        m.exp[i] = 0;
    };
    if (cutoff > 0) rec(0, cutoff - 1);
    return out;
}

// dim_k O/(I + m^cutoff) where I = (gens), all monomial multiples of the
// generators truncated below the cutoff
inline std::size_t truncated_quotient_dim(const std::vector<Polynomial>& gens,
                                          unsigned cutoff) {
    const RingPtr& ring = gens.at(0).ring();
    std::size_t n = ring->nvars();
    auto basis = monomials_below(n, cutoff);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        for (const auto& mult : basis) {
            std::vector<Rational> row(basis.size(), Rational(0));
            bool nonzero = false;
            for (const auto& [m, c] : g.terms()) {
                Monomial prod = mult * m;
                auto it = index.find(prod);
                if (it == index.end()) continue;  // truncated away
                row[it->second] += c;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMatrix A(rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) A.at(r, c) = rows[r][c];
    return basis.size() - A.rank();
}

// local quotient dimension at the origin, certified by stabilization
// over two consecutive cutoffs; nullopt when no stabilization happens
// below the cap (infinite-dimensional or cap too small)
inline std::optional<std::size_t> macaulay_quotient_dim(
    const std::vector<Polynomial>& gens, unsigned degree_cap = 12) {
    std::optional<std::size_t> prev;
    for (unsigned cutoff = 1; cutoff <= degree_cap; ++cutoff) {
        std::size_t dim = truncated_quotient_dim(gens, cutoff);
        if (prev && *prev == dim) return dim;
        prev = dim;
    }
    return std::nullopt;
}

// module version over S^k: generators are k-tuples of polynomials, the
// truncated basis is (component, monomial) pairs
inline std::size_t truncated_module_quotient_dim(
    const std::vector<std::vector<Polynomial>>& gens, std::size_t rank,
    unsigned cutoff) {
    const RingPtr& ring = gens.at(0).at(0).ring();
    std::size_t n = ring->nvars();
    auto monos = monomials_below(n, cutoff);
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    std::size_t dim = 0;
    for (std::size_t l = 0; l < rank; ++l)
        for (const auto& m : monos) index[{l, m}] = dim++;

    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        for (const auto& mult : monos) {
            std::vector<Rational> row(dim, Rational(0));
            bool nonzero = false;
            for (std::size_t l = 0; l < rank; ++l)
                for (const auto& [m, c] : g.at(l).terms()) {
                    auto it = index.find({l, mult * m});
                    if (it == index.end()) continue;
                    row[it->second] += c;
                    nonzero = true;
                }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMatrix A(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) A.at(r, c) = rows[r][c];
    return dim - A.rank();
}

inline std::optional<std::size_t> macaulay_module_quotient_dim(
    const std::vector<std::vector<Polynomial>>& gens, std::size_t rank,
    unsigned degree_cap = 12) {
    std::optional<std::size_t> prev;
    for (unsigned cutoff = 1; cutoff <= degree_cap; ++cutoff) {
        std::size_t dim = truncated_module_quotient_dim(gens, rank, cutoff);
        if (prev && *prev == dim) return dim;
        prev = dim;
    }
    return std::nullopt;
}

}  // namespace deforma::oracle
