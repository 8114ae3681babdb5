#pragma once

#include "deforma/polyring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace deforma {

// Aborted because a configured cap was hit, as opposed to a
// mathematical failure; the CLI maps this to its own exit code.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimits {
    std::size_t max_pairs = 100000;
    unsigned max_degree = 64;
};

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;  // zero generators are dropped

    Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            check_same_ring(ring, g.ring());
            generators.push_back(std::move(g));
        }
    }
};

// Element of a free module S^k over the polynomial ring; k = 1 is the
// ideal case and every ideal computation goes through this type.
class ModuleElement {
public:
    ModuleElement(RingPtr ring, std::size_t rank)
        : ring_(std::move(ring)), comps_(rank, Polynomial(ring_)) {
        for (auto& c : comps_) c = Polynomial(ring_);
    }
    static ModuleElement from_polynomial(Polynomial f) {
        ModuleElement e(f.ring(), 1);
        e.comps_[0] = std::move(f);
        return e;
    }
    static ModuleElement unit(RingPtr ring, std::size_t rank, std::size_t pos,
                              Polynomial f) {
        ModuleElement e(std::move(ring), rank);
        e.comps_.at(pos) = std::move(f);
        return e;
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& component(std::size_t i) const { return comps_.at(i); }
    Polynomial& component(std::size_t i) { return comps_.at(i); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }
    int degree() const {
        int d = -1;
        for (const auto& c : comps_) d = std::max(d, c.degree());
        return d;
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    friend ModuleElement operator*(const Polynomial& p, ModuleElement e) {
        for (auto& c : e.comps_) c = p * c;
        return e;
    }
    friend ModuleElement operator*(const Rational& r, ModuleElement e) {
        for (auto& c : e.comps_) c = c * r;
        return e;
    }

    bool operator==(const ModuleElement& o) const { return comps_ == o.comps_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

// position-over-term leading term: the lowest nonzero component wins,
// then the monomial ordering inside that component
struct ModuleLeadTerm {
    std::size_t component;
    Monomial mono;
    Rational coeff;
};
ModuleLeadTerm leading_term(const ModuleElement& e, const MonomialOrdering& ord);

class StandardBasis {
public:
    StandardBasis(MonomialOrdering ord, std::size_t rank,
                  std::vector<ModuleElement> elements)
        : ordering_(std::move(ord)), rank_(rank), elements_(std::move(elements)) {
        lead_.reserve(elements_.size());
        for (const auto& e : elements_) lead_.push_back(leading_term(e, ordering_));
    }

    const MonomialOrdering& ordering() const { return ordering_; }
    std::size_t rank() const { return rank_; }
    const std::vector<ModuleElement>& elements() const { return elements_; }
    const std::vector<ModuleLeadTerm>& leading_terms() const { return lead_; }
    const RingPtr& ring() const { return elements_.empty() ? null_ring_ : elements_[0].ring(); }
    bool empty() const { return elements_.empty(); }

    void set_ring_hint(RingPtr r) { null_ring_ = std::move(r); }

private:
    MonomialOrdering ordering_;
    std::size_t rank_;
    std::vector<ModuleElement> elements_;
    std::vector<ModuleLeadTerm> lead_;
    RingPtr null_ring_;
};

StandardBasis standard_basis(RingPtr ring, std::size_t rank,
                             std::vector<ModuleElement> generators,
                             const MonomialOrdering& ord,
                             const ResourceLimits& limits = {});

StandardBasis standard_basis(const Ideal& I, const MonomialOrdering& ord,
                             const ResourceLimits& limits = {});

// Mora weak normal form (plain division for global orderings). The
// remainder's terms are not divisible by any basis leading term, and it
// is zero exactly when f lies in the (localized) ideal or submodule.
ModuleElement normal_form(const ModuleElement& f, const StandardBasis& B,
                          const ResourceLimits& limits = {});
Polynomial normal_form(const Polynomial& f, const StandardBasis& B,
                       const ResourceLimits& limits = {});

struct QuotientDimension {
    enum class Tag { Finite, Infinite };
    Tag tag;
    std::size_t value;  // vector-space dimension if Finite, Krull dimension if Infinite

    bool finite() const { return tag == Tag::Finite; }
    bool operator==(const QuotientDimension&) const = default;

    static QuotientDimension finite_dim(std::size_t d) { return {Tag::Finite, d}; }
    static QuotientDimension infinite(std::size_t krull) { return {Tag::Infinite, krull}; }
};

QuotientDimension quotient_dimension(const StandardBasis& B);

// standard monomials (component, monomial), sorted increasing in the
// basis ordering; only valid when the quotient is finite-dimensional
std::vector<std::pair<std::size_t, Monomial>> standard_monomials(const StandardBasis& B);

// Krull dimension of ring/leading-term ideal, by maximal independent
// variable-set search; 0 for the unit ideal by convention.
std::size_t krull_dimension(const StandardBasis& B);

}  // namespace deforma
