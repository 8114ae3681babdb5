#include "deforma/gbasis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <functional>

namespace deforma {
namespace {

void check_degree(const ModuleElement& e, const ResourceLimits& limits) {
    if (e.degree() > static_cast<int>(limits.max_degree))
        throw ResourceLimitError("degree cap " + std::to_string(limits.max_degree) +
                                 " exceeded during standard basis computation");
}

// divide by gcd of numerators, multiply by lcm of denominators, and
// make the leading coefficient positive; keeps coefficients small
void normalize_content(ModuleElement& e, const MonomialOrdering& ord) {
    Integer num_gcd = 0, den_lcm = 1;
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (const auto& [m, c] : e.component(i).terms()) {
            num_gcd = gcd(num_gcd, numerator(c));
            den_lcm = lcm(den_lcm, denominator(c));
        }
    if (num_gcd == 0) return;
    Rational scale(den_lcm, num_gcd);
    if (leading_term(e, ord).coeff < 0) scale = -scale;
    for (std::size_t i = 0; i < e.rank(); ++i)
        e.component(i) = e.component(i) * scale;
}

int ecart(const ModuleElement& e, const ModuleLeadTerm& lt) {
    return e.degree() - static_cast<int>(lt.mono.degree());
}

ModuleElement monomial_multiple(const ModuleElement& e, const Monomial& m,
                                const Rational& c) {
    ModuleElement r(e.ring(), e.rank());
    Polynomial t = Polynomial::term(e.ring(), m, c);
    for (std::size_t i = 0; i < e.rank(); ++i) r.component(i) = t * e.component(i);
    return r;
}

// cancel the leading term of h against reducer g
ModuleElement reduce_step(const ModuleElement& h, const ModuleLeadTerm& lth,
                          const ModuleElement& g, const ModuleLeadTerm& ltg) {
    Monomial q = lth.mono / ltg.mono;
    Rational c = lth.coeff / ltg.coeff;
    ModuleElement r = h;
    r -= monomial_multiple(g, q, c);
    return r;
}

// Mora weak normal form of the leading term: reduce the head until it
// is irreducible, allowing earlier intermediate results as reducers
// when their ecart is smaller (this is what makes the local case
// terminate). Returns h with an irreducible head, or zero.
ModuleElement mora_head_reduce(ModuleElement h,
                               std::vector<ModuleElement> reducers,
                               std::vector<ModuleLeadTerm> reducer_lts,
                               const MonomialOrdering& ord,
                               const ResourceLimits& limits) {
    while (!h.is_zero()) {
        check_degree(h, limits);
        ModuleLeadTerm lth = leading_term(h, ord);
        int best = -1;
        int best_ecart = 0;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            const auto& lt = reducer_lts[i];
            if (lt.component != lth.component || !lt.mono.divides(lth.mono)) continue;
            int ec = ecart(reducers[i], lt);
            if (best < 0 || ec < best_ecart) {
                best = static_cast<int>(i);
                best_ecart = ec;
            }
        }
        if (best < 0) break;
        if (best_ecart > ecart(h, lth)) {
            reducers.push_back(h);
            reducer_lts.push_back(lth);
        }
        h = reduce_step(h, lth, reducers[best], reducer_lts[best]);
    }
    return h;
}

// full remainder: peel off irreducible heads one by one
ModuleElement full_normal_form(const ModuleElement& f,
                               const std::vector<ModuleElement>& basis,
                               const std::vector<ModuleLeadTerm>& basis_lts,
                               const MonomialOrdering& ord,
                               const ResourceLimits& limits) {
    ModuleElement remainder(f.ring(), f.rank());
    ModuleElement h = f;
    while (!h.is_zero()) {
        h = mora_head_reduce(h, basis, basis_lts, ord, limits);
        if (h.is_zero()) break;
        ModuleLeadTerm lth = leading_term(h, ord);
        ModuleElement head = ModuleElement::unit(
            h.ring(), h.rank(), lth.component,
            Polynomial::term(h.ring(), lth.mono, lth.coeff));
        remainder += head;
        h -= head;
    }
    return remainder;
}

struct Pair {
    std::size_t i, j;
    unsigned lcm_degree;
};

}  // namespace

ModuleLeadTerm leading_term(const ModuleElement& e, const MonomialOrdering& ord) {
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.component(i).is_zero()) continue;
        auto [m, c] = e.component(i).leading_term(ord);
        return {i, m, c};
    }
    throw std::logic_error("leading term of zero module element");
}

StandardBasis standard_basis(RingPtr ring, std::size_t rank,
                             std::vector<ModuleElement> generators,
                             const MonomialOrdering& ord,
                             const ResourceLimits& limits) {
    std::vector<ModuleElement> basis;
    std::vector<ModuleLeadTerm> lts;
    auto add = [&](ModuleElement e) {
        normalize_content(e, ord);
        lts.push_back(leading_term(e, ord));
        basis.push_back(std::move(e));
    };
    for (auto& g : generators)
        if (!g.is_zero()) add(std::move(g));

    std::deque<Pair> pairs;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (lts[i].component != lts[j].component) continue;
            // product criterion (ideals only): coprime leading monomials
            // give an S-polynomial that reduces to zero
            if (rank == 1) {
                Monomial l = Monomial::lcm(lts[i].mono, lts[j].mono);
                if (l.degree() == lts[i].mono.degree() + lts[j].mono.degree()) continue;
            }
            pairs.push_back({i, j, Monomial::lcm(lts[i].mono, lts[j].mono).degree()});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > limits.max_pairs)
            throw ResourceLimitError("S-pair cap " + std::to_string(limits.max_pairs) +
                                     " exceeded");
        // normal strategy: smallest lcm degree first, then queue order
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const Pair& a, const Pair& b) {
                                       return a.lcm_degree < b.lcm_degree;
                                   });
        Pair p = *it;
        pairs.erase(it);

        Monomial l = Monomial::lcm(lts[p.i].mono, lts[p.j].mono);
        ModuleElement s =
            monomial_multiple(basis[p.i], l / lts[p.i].mono, Rational(1) / lts[p.i].coeff);
        s -= monomial_multiple(basis[p.j], l / lts[p.j].mono, Rational(1) / lts[p.j].coeff);
        if (s.is_zero()) continue;
        ModuleElement h = mora_head_reduce(s, basis, lts, ord, limits);
        if (h.is_zero()) continue;
        add(std::move(h));
        queue_pairs_with(basis.size() - 1);
    }

    // minimalize: drop elements whose lead term is divisible by another's
    std::vector<ModuleElement> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || lts[j].component != lts[i].component ||
                !lts[j].mono.divides(lts[i].mono))
                continue;
            if (lts[j].mono == lts[i].mono && j > i) continue;  // keep the first
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    StandardBasis result(ord, rank, std::move(minimal));
    result.set_ring_hint(std::move(ring));
    return result;
}

StandardBasis standard_basis(const Ideal& I, const MonomialOrdering& ord,
                             const ResourceLimits& limits) {
    std::vector<ModuleElement> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(ModuleElement::from_polynomial(g));
    return standard_basis(I.ring, 1, std::move(gens), ord, limits);
}

ModuleElement normal_form(const ModuleElement& f, const StandardBasis& B,
                          const ResourceLimits& limits) {
    if (f.is_zero() || B.empty()) return f;
    return full_normal_form(f, B.elements(), B.leading_terms(), B.ordering(), limits);
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& B,
                       const ResourceLimits& limits) {
    if (B.rank() != 1) throw std::invalid_argument("polynomial normal form needs an ideal basis");
    return normal_form(ModuleElement::from_polynomial(f), B, limits).component(0);
}

namespace {

// monomial ideal helpers on the leading terms of one component

std::vector<Monomial> component_leads(const StandardBasis& B, std::size_t comp) {
    std::vector<Monomial> leads;
    for (const auto& lt : B.leading_terms())
        if (lt.component == comp) leads.push_back(lt.mono);
    return leads;
}

bool contains_unit(const std::vector<Monomial>& leads) {
    for (const auto& m : leads)
        if (m.degree() == 0) return true;
    return false;
}

// zero-dimensional iff a pure power of every variable appears; returns
// the box bounds when it does
std::optional<std::vector<unsigned>> staircase_box(const std::vector<Monomial>& leads,
                                                   std::size_t n) {
    std::vector<unsigned> box(n, 0);
    std::vector<bool> found(n, false);
    for (const auto& m : leads) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.exp[i] > 0) { ++support; var = i; }
        if (support == 0) return std::vector<unsigned>(n, 0);  // unit ideal
        if (support == 1 && (!found[var] || m.exp[var] < box[var])) {
            found[var] = true;
            box[var] = m.exp[var];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!found[i]) return std::nullopt;
    return box;
}

void enumerate_standard(const std::vector<Monomial>& leads,
                        const std::vector<unsigned>& box,
                        std::vector<Monomial>& out) {
    std::size_t n = box.size();
    Monomial m = Monomial::one(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (const auto& l : leads)
                if (l.divides(m)) return;
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e < std::max(box[i], 1u); ++e) {
            m.exp[i] = e;
            rec(i + 1);
        }
        m.exp[i] = 0;
    };
    rec(0);
}

// Krull dimension of k[x]/monomial ideal: the largest variable subset S
// such that no generator is supported inside S. Unit ideal maps to 0 by
// convention so the zero-dimensionality criteria agree.
std::size_t monomial_krull_dimension(const std::vector<Monomial>& leads, std::size_t n) {
    if (contains_unit(leads)) return 0;
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i)
                if (m.exp[i] > 0 && !(mask & (1u << i))) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

}  // namespace

QuotientDimension quotient_dimension(const StandardBasis& B) {
    const RingPtr& ring = B.ring();
    if (!ring) throw std::logic_error("basis without ring");
    std::size_t n = ring->nvars();

    std::size_t total = 0;
    std::size_t max_krull = 0;
    bool finite = true;
    for (std::size_t comp = 0; comp < B.rank(); ++comp) {
        auto leads = component_leads(B, comp);
        auto box = staircase_box(leads, n);
        if (!box) {
            finite = false;
            max_krull = std::max(max_krull, monomial_krull_dimension(leads, n));
            continue;
        }
        if (contains_unit(leads)) continue;
        std::vector<Monomial> std_monos;
        enumerate_standard(leads, *box, std_monos);
        total += std_monos.size();
    }
    if (finite) return QuotientDimension::finite_dim(total);
    return QuotientDimension::infinite(max_krull);
}

std::vector<std::pair<std::size_t, Monomial>> standard_monomials(const StandardBasis& B) {
    const RingPtr& ring = B.ring();
    std::size_t n = ring->nvars();
    std::vector<std::pair<std::size_t, Monomial>> result;
    for (std::size_t comp = 0; comp < B.rank(); ++comp) {
        auto leads = component_leads(B, comp);
        auto box = staircase_box(leads, n);
        if (!box) throw std::logic_error("standard monomials of an infinite quotient");
        if (contains_unit(leads)) continue;
        std::vector<Monomial> monos;
        enumerate_standard(leads, *box, monos);
        // lowest degree first so finite bases always start at 1
        MonomialOrdering deg = MonomialOrdering::global();
        std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
            return deg.greater(b, a);
        });
        for (auto& m : monos) result.emplace_back(comp, std::move(m));
    }
    return result;
}

std::size_t krull_dimension(const StandardBasis& B) {
    if (B.rank() != 1) throw std::invalid_argument("krull_dimension needs an ideal basis");
    const RingPtr& ring = B.ring();
    return monomial_krull_dimension(component_leads(B, 0), ring->nvars());
}

}  // namespace deforma
