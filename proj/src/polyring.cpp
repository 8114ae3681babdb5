#include "deforma/polyring.hpp"

#include <sstream>

namespace deforma {

Polynomial differentiate(const Polynomial& f, std::size_t i) {
    const RingPtr& ring = f.ring();
    if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
    Polynomial r(ring);
    for (const auto& [m, c] : f.terms()) {
        if (m.exp[i] == 0) continue;
        Monomial d = m;
        d.exp[i] -= 1;
        r.add_term(d, c * static_cast<int>(m.exp[i]));
    }
    return r;
}

Polynomial apply_linear(const Polynomial& f, const LinearMap& A) {
    const RingPtr& ring = f.ring();
    std::size_t n = ring->nvars();
    if (A.size() != n)
        throw std::invalid_argument("matrix shape does not match ring");
    for (const auto& row : A.matrix)
        if (row.size() != n)
            throw std::invalid_argument("matrix shape does not match ring");

    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img(ring);
        for (std::size_t j = 0; j < n; ++j)
            img += Polynomial::variable(ring, j) * A.matrix[i][j];
        images.push_back(std::move(img));
    }

    Polynomial r(ring);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(ring, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m.exp[i] > 0) t = t * images[i].pow(m.exp[i]);
        r += t;
    }
    return r;
}

Polynomial translate(const Polynomial& f, const std::vector<Rational>& p) {
    const RingPtr& ring = f.ring();
    std::size_t n = ring->nvars();
    if (p.size() != n) throw std::invalid_argument("point dimension mismatch");
    Polynomial r(ring);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(ring, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp[i] == 0) continue;
            Polynomial xi = Polynomial::variable(ring, i) + Polynomial::constant(ring, p[i]);
            t = t * xi.pow(m.exp[i]);
        }
        r += t;
    }
    return r;
}

std::optional<HomogeneityInfo> is_homogeneous(const Polynomial& f) {
    if (f.is_zero()) return HomogeneityInfo{0, true};
    unsigned d = f.terms().begin()->first.degree();
    for (const auto& [m, c] : f.terms())
        if (m.degree() != d) return std::nullopt;
    return HomogeneityInfo{d, false};
}

std::string to_string(const Monomial& m, const Ring& ring) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!first) os << "*";
        os << ring.var(i);
        if (m.exp[i] > 1) os << "^" << m.exp[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    // print highest degree first, ties broken by the stored exponent order
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.first.degree() > b.first.degree();
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant = m.degree() == 0;
        if (a != 1 || constant) {
            os << to_string(a);
            if (!constant) os << "*";
        }
        if (!constant) os << to_string(m, *f.ring());
        first = false;
    }
    return os.str();
}

}  // namespace deforma
