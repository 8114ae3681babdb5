#pragma once

#include "deforma/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace deforma {

struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ambient polynomial ring: a fixed, ordered list of variable names.
// Rings compare by value; polynomials from different rings never mix.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty())
            throw std::invalid_argument("ring needs at least one variable");
    }

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& vars() const { return vars_; }

    std::optional<std::size_t> var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b)
        throw RingMismatchError("operands live in different rings");
}

// Exponent vector; the length always equals the ring's variable count.
struct Monomial {
    std::vector<unsigned> exp;

    unsigned degree() const {
        return std::accumulate(exp.begin(), exp.end(), 0u);
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
        return r;
    }
    // caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= m.exp[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            r.exp[i] = std::max(a.exp[i], b.exp[i]);
        return r;
    }
    static Monomial one(std::size_t n) { return Monomial{std::vector<unsigned>(n, 0u)}; }

    bool operator==(const Monomial& m) const { return exp == m.exp; }
    bool operator<(const Monomial& m) const { return exp < m.exp; }  // storage order only
};

// Monomial orderings in scope: degrevlex (global, 1 smallest) and
// negative degrevlex (local, 1 largest). An optional variable permutation
// reorders variables before comparison; perm[i] is the rank of variable i.
struct MonomialOrdering {
    enum class Kind { GlobalDegRevLex, LocalNegDegRevLex };
    Kind kind = Kind::GlobalDegRevLex;
    std::vector<std::size_t> perm;  // empty means identity

    bool is_local() const { return kind == Kind::LocalNegDegRevLex; }

    static MonomialOrdering global() { return {Kind::GlobalDegRevLex, {}}; }
    static MonomialOrdering local() { return {Kind::LocalNegDegRevLex, {}}; }

    // strict "a comes after b", i.e. a > b in the ordering
    bool greater(const Monomial& a, const Monomial& b) const {
        int da = static_cast<int>(a.degree()), db = static_cast<int>(b.degree());
        if (da != db)
            return is_local() ? da < db : da > db;
        // revlex tie-break: the last (in permuted order) nonzero difference
        // decides, with the smaller exponent winning
        std::size_t n = a.exp.size();
        for (std::size_t k = n; k-- > 0;) {
            std::size_t i = perm.empty() ? k : invperm(k);
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
        }
        return false;
    }

private:
    std::size_t invperm(std::size_t rank) const {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] == rank) return i;
        return rank;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in a map keyed by exponent vector, so the canonical
// form is unique and iteration order is deterministic.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_[Monomial::one(ring->nvars())] = c;
        return p;
    }
    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->nvars()) throw std::out_of_range("variable index");
        Monomial m = Monomial::one(ring->nvars());
        m.exp[i] = 1;
        Polynomial p(ring);
        p.terms_[m] = 1;
        return p;
    }
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // max total degree over terms; -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a.ring_);
        if (c == 0) return r;
        for (const auto& [m, co] : a.terms_) r.terms_[m] = co * c;
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    bool operator==(const Polynomial& o) const {
        return terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // leading term under an ordering; polynomial must be nonzero
    std::pair<Monomial, Rational> leading_term(const MonomialOrdering& ord) const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != ring_->nvars())
            throw std::invalid_argument("point dimension mismatch");
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (unsigned k = 0; k < m.exp[i]; ++k) v *= point[i];
            total += v;
        }
        return total;
    }

private:
    RingPtr ring_;
    TermMap terms_;
};

// n x n exact rational matrix used for linear coordinate changes
struct LinearMap {
    std::vector<std::vector<Rational>> matrix;

    std::size_t size() const { return matrix.size(); }

    static LinearMap identity(std::size_t n) {
        LinearMap A{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
        for (std::size_t i = 0; i < n; ++i) A.matrix[i][i] = 1;
        return A;
    }
};

Polynomial differentiate(const Polynomial& f, std::size_t i);

// substitution x_i -> sum_j A[i][j] * x_j
Polynomial apply_linear(const Polynomial& f, const LinearMap& A);

// translation x_i -> x_i + p_i
Polynomial translate(const Polynomial& f, const std::vector<Rational>& p);

// common total degree when one exists; {degree, degenerate} where
// degenerate marks the zero polynomial (homogeneous of every degree)
struct HomogeneityInfo {
    unsigned degree = 0;
    bool degenerate = false;
};
std::optional<HomogeneityInfo> is_homogeneous(const Polynomial& f);

std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace deforma
