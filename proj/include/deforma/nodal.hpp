#pragma once

#include "deforma/linalg.hpp"
#include "deforma/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace deforma {

// Reduced curve glued from P^1 components along multi-branch points.
// Each gluing point lists the (component, branch tag) pairs it
// identifies; tags are opaque strings unique per component.
struct DualGraphCurve {
    std::size_t components = 0;
    using Branch = std::pair<std::size_t, std::string>;
    std::vector<std::vector<Branch>> points;

    // throws std::invalid_argument on any violated invariant:
    // m_p >= 2, branches used at most once, connected incidence graph
    void validate() const;
};

// (h0, h1) of O(d) on P^1
std::pair<std::size_t, std::size_t> p1_cohomology(long d);

std::size_t arithmetic_genus(const DualGraphCurve& X);

struct DeformationReport {
    std::size_t genus = 0;
    std::size_t h1_tangent = 0;
    std::size_t local_t1_sum = 0;
    std::size_t ext1_dim = 0;
    std::size_t h0_tangent = 0;
    bool stable = false;
    std::vector<std::size_t> component_degrees;
    // true when the dual graph falls outside the configurations the
    // dimension formula was established for; the number is then an
    // extrapolation of the same formula
    bool formula_extrapolated = false;
};

DeformationReport deformation_report(const DualGraphCurve& X);

struct NodalRationalDims {
    std::size_t h1_equisingular;
    std::size_t local_sum;
    std::size_t ext1;
};

// rational curve with g nodes: (max(0, 2g-3), g, sum)
NodalRationalDims nodal_rational_dims(std::size_t g);

// affine coordinate on P^1 or the point at infinity
struct PointAtInfinity {
    bool operator==(const PointAtInfinity&) const = default;
};
using MarkedPoint = std::variant<Rational, PointAtInfinity>;

struct MarkedPointList {
    std::vector<MarkedPoint> points;  // pairwise distinct, at most one infinity

    void validate() const;
};

// 3 x N matrix with columns (1, t, t^2) for finite t and (0, 0, 1) at
// infinity
QMatrix eval_matrix(const MarkedPointList& pts);

struct EvalRankAnalysis {
    std::size_t rank;
    // rank 3: indices of a witness column triple and its nonzero minor
    std::optional<std::array<std::size_t, 3>> witness_columns;
    Rational witness_minor = 0;
    // rank < 3: which degenerate configuration applies
    enum class Degeneracy { None, GenusZero, GenusOne };
    Degeneracy degeneracy = Degeneracy::None;
};

EvalRankAnalysis eval_rank_analysis(const MarkedPointList& pts);

// canned dual graphs covering the worked configurations; used by the
// CLI shorthands and the test corpus
DualGraphCurve self_nodal_curve(std::size_t g);
DualGraphCurve two_p1_curve(std::size_t nodes);
DualGraphCurve three_chain_curve();                   // degrees 2, 3, 1 with a self-node
DualGraphCurve three_star_curve(std::size_t m);       // one m-fold point, degrees 1, m-2, 1
DualGraphCurve three_pairwise_curve(std::size_t n);   // 3n nodes, n between each pair

// JSON wire format:
// {"components": <count>, "points": [[[comp, "tag"], ...], ...]}
DualGraphCurve parse_dual_graph_json(const std::string& text);
std::string dual_graph_to_json(const DualGraphCurve& X);

}  // namespace deforma
