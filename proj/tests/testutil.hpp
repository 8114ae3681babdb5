#pragma once

#include "deforma/linalg.hpp"
#include "deforma/polyring.hpp"

#include <cstdint>
#include <vector>

namespace deforma::testutil {

// deterministic generator for property tests (splitmix64)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long max_abs = 5, long max_den = 4) {
        long num = range(-max_abs, max_abs);
        long den = range(1, max_den);
        return Rational(num, den);
    }
    Rational nonzero_rational(long max_abs = 5, long max_den = 4) {
        Rational r = rational(max_abs, max_den);
        while (r == 0) r = rational(max_abs, max_den);
        return r;
    }

    Monomial monomial(std::size_t nvars, unsigned max_deg) {
        Monomial m = Monomial::one(nvars);
        unsigned budget = static_cast<unsigned>(range(0, max_deg));
        for (unsigned k = 0; k < budget; ++k)
            m.exp[static_cast<std::size_t>(range(0, static_cast<long>(nvars) - 1))] += 1;
        return m;
    }

    Polynomial polynomial(const RingPtr& ring, unsigned max_deg = 4,
                          unsigned max_terms = 5) {
        Polynomial p(ring);
        unsigned terms = static_cast<unsigned>(range(1, max_terms));
        for (unsigned k = 0; k < terms; ++k)
            p.add_term(monomial(ring->nvars(), max_deg), rational());
        return p;
    }

    Polynomial nonzero_polynomial(const RingPtr& ring, unsigned max_deg = 4,
                                  unsigned max_terms = 5) {
        Polynomial p = polynomial(ring, max_deg, max_terms);
        while (p.is_zero()) p = polynomial(ring, max_deg, max_terms);
        return p;
    }

    Polynomial homogeneous(const RingPtr& ring, unsigned deg, unsigned max_terms = 5) {
        Polynomial p(ring);
        unsigned terms = static_cast<unsigned>(range(1, max_terms));
        for (unsigned k = 0; k < terms; ++k) {
            Monomial m = Monomial::one(ring->nvars());
            for (unsigned d = 0; d < deg; ++d)
                m.exp[static_cast<std::size_t>(range(0, static_cast<long>(ring->nvars()) - 1))] += 1;
            p.add_term(m, rational());
        }
        return p;
    }

    // random invertible matrix built from elementary operations, so the
    // inverse is exact and guaranteed to exist
    LinearMap invertible_map(std::size_t n, unsigned ops = 6) {
        LinearMap A = LinearMap::identity(n);
        for (unsigned k = 0; k < ops; ++k) {
            std::size_t i = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
            if (i == j) {
                Rational s = nonzero_rational(3, 2);
                for (std::size_t c = 0; c < n; ++c) A.matrix[i][c] *= s;
            } else {
                Rational s = rational(2, 2);
                for (std::size_t c = 0; c < n; ++c)
                    A.matrix[i][c] += s * A.matrix[j][c];
            }
        }
        return A;
    }

private:
    std::uint64_t state_;
};

inline LinearMap invert(const LinearMap& A) {
    std::size_t n = A.size();
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = A.matrix[i][j];
    auto inv = m.inverse();
    if (!inv) throw std::invalid_argument("matrix not invertible");
    LinearMap B = LinearMap::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) B.matrix[i][j] = inv->at(i, j);
    return B;
}

// substitute each variable by an arbitrary polynomial (used by the
// first-order consistency checks that adjoin a deformation parameter)
inline Polynomial compose(const Polynomial& f, const RingPtr& target,
                          const std::vector<Polynomial>& images) {
    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.exp.size(); ++i)
            if (m.exp[i] > 0) t = t * images.at(i).pow(m.exp[i]);
        r += t;
    }
    return r;
}

}  // namespace deforma::testutil
