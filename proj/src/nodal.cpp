#include "deforma/nodal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace deforma {

void DualGraphCurve::validate() const {
    if (components == 0) throw std::invalid_argument("curve needs at least one component");
    std::set<Branch> seen;
    for (const auto& pt : points) {
        if (pt.size() < 2)
            throw std::invalid_argument("every gluing point needs at least two branches");
        for (const auto& br : pt) {
            if (br.first >= components)
                throw std::invalid_argument("component index out of range");
            if (!seen.insert(br).second)
                throw std::invalid_argument("branch tag '" + br.second +
                                            "' on component " + std::to_string(br.first) +
                                            " is used by more than one point");
        }
    }
    // connectivity of the component/point incidence graph via union-find
    std::vector<std::size_t> parent(components);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& pt : points)
        for (std::size_t k = 1; k < pt.size(); ++k)
            parent[find(pt[k].first)] = find(pt[0].first);
    for (std::size_t c = 1; c < components; ++c)
        if (find(c) != find(0))
            throw std::invalid_argument("dual graph is not connected");
}

std::pair<std::size_t, std::size_t> p1_cohomology(long d) {
    std::size_t h0 = d + 1 > 0 ? static_cast<std::size_t>(d + 1) : 0;
    std::size_t h1 = -d - 1 > 0 ? static_cast<std::size_t>(-d - 1) : 0;
    return {h0, h1};
}

std::size_t arithmetic_genus(const DualGraphCurve& X) {
    X.validate();
    std::size_t branch_excess = 0;
    for (const auto& pt : X.points) branch_excess += pt.size() - 1;
    return branch_excess + 1 - X.components;
}

namespace {

// the dimension formula is proven for the worked configurations: any
// all-nodal gluing of at most three P^1's, a single multi-branch point,
// and the self-glued rational curve
bool recognized_configuration(const DualGraphCurve& X) {
    if (X.points.size() == 1 || X.points.empty()) return true;
    bool all_nodes = std::all_of(X.points.begin(), X.points.end(),
                                 [](const auto& pt) { return pt.size() == 2; });
    return all_nodes && X.components <= 3;
}

}  // namespace

DeformationReport deformation_report(const DualGraphCurve& X) {
    X.validate();
    DeformationReport r;
    r.component_degrees.assign(X.components, 0);
    for (const auto& pt : X.points) {
        r.local_t1_sum += pt.size() - 1;
        for (const auto& br : pt) r.component_degrees[br.first] += 1;
    }
    for (std::size_t d : r.component_degrees) {
        auto [h0, h1] = p1_cohomology(2 - static_cast<long>(d));
        r.h0_tangent += h0;
        r.h1_tangent += h1;
    }
    r.ext1_dim = r.h1_tangent + r.local_t1_sum;
    r.genus = r.local_t1_sum + 1 - X.components;
    r.stable = r.h0_tangent == 0 && r.genus >= 2;
    r.formula_extrapolated = !recognized_configuration(X);
    return r;
}

NodalRationalDims nodal_rational_dims(std::size_t g) {
    std::size_t h1 = g >= 2 ? 2 * g - 3 : 0;
    return {h1, g, h1 + g};
}

void MarkedPointList::validate() const {
    std::size_t infinities = 0;
    std::set<Rational> finite;
    for (const auto& p : points) {
        if (std::holds_alternative<PointAtInfinity>(p)) {
            if (++infinities > 1)
                throw std::invalid_argument("at most one point at infinity");
        } else if (!finite.insert(std::get<Rational>(p)).second) {
            throw std::invalid_argument("duplicate marked point " +
                                        to_string(std::get<Rational>(p)));
        }
    }
}

QMatrix eval_matrix(const MarkedPointList& pts) {
    pts.validate();
    QMatrix M(3, pts.points.size());
    for (std::size_t j = 0; j < pts.points.size(); ++j) {
        if (std::holds_alternative<PointAtInfinity>(pts.points[j])) {
            M.at(2, j) = 1;
        } else {
            const Rational& t = std::get<Rational>(pts.points[j]);
            M.at(0, j) = 1;
            M.at(1, j) = t;
            M.at(2, j) = t * t;
        }
    }
    return M;
}

EvalRankAnalysis eval_rank_analysis(const MarkedPointList& pts) {
    QMatrix M = eval_matrix(pts);
    EvalRankAnalysis a;
    a.rank = M.rank();
    if (a.rank == 3) {
        // first column triple with a nonzero 3x3 minor, in column order
        std::size_t n = M.cols();
        for (std::size_t i = 0; i < n && !a.witness_columns; ++i)
            for (std::size_t j = i + 1; j < n && !a.witness_columns; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    QMatrix V(3, 3);
                    for (std::size_t r = 0; r < 3; ++r) {
                        V.at(r, 0) = M.at(r, i);
                        V.at(r, 1) = M.at(r, j);
                        V.at(r, 2) = M.at(r, k);
                    }
                    Rational d = V.det();
                    if (d != 0) {
                        a.witness_columns = {i, j, k};
                        a.witness_minor = d;
                        break;
                    }
                }
        return a;
    }
    // with pairwise-distinct points and at most one infinity, rank < 3
    // only happens for at most two points
    a.degeneracy = pts.points.empty() ? EvalRankAnalysis::Degeneracy::GenusZero
                                      : EvalRankAnalysis::Degeneracy::GenusOne;
    return a;
}

DualGraphCurve self_nodal_curve(std::size_t g) {
    DualGraphCurve X;
    X.components = 1;
    for (std::size_t i = 0; i < g; ++i)
        X.points.push_back({{0, "a" + std::to_string(i)}, {0, "b" + std::to_string(i)}});
    return X;
}

DualGraphCurve two_p1_curve(std::size_t nodes) {
    if (nodes == 0) throw std::invalid_argument("two components need at least one node");
    DualGraphCurve X;
    X.components = 2;
    for (std::size_t i = 0; i < nodes; ++i)
        X.points.push_back({{0, "a" + std::to_string(i)}, {1, "b" + std::to_string(i)}});
    return X;
}

DualGraphCurve three_chain_curve() {
    DualGraphCurve X;
    X.components = 3;
    X.points.push_back({{0, "a1"}, {2, "c1"}});
    X.points.push_back({{0, "a2"}, {1, "b2"}});
    X.points.push_back({{1, "b1"}, {1, "b3"}});
    return X;
}

DualGraphCurve three_star_curve(std::size_t m) {
    if (m < 3) throw std::invalid_argument("the star configuration needs m >= 3");
    DualGraphCurve X;
    X.components = 3;
    std::vector<DualGraphCurve::Branch> branches;
    branches.push_back({0, "a"});
    for (std::size_t i = 1; i + 1 < m; ++i)
        branches.push_back({1, "b" + std::to_string(i)});
    branches.push_back({2, "c"});
    X.points.push_back(std::move(branches));
    return X;
}

DualGraphCurve three_pairwise_curve(std::size_t n) {
    if (n == 0) throw std::invalid_argument("need at least one node per pair");
    DualGraphCurve X;
    X.components = 3;
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        X.points.push_back({{0, "ab" + s}, {1, "ba" + s}});
        X.points.push_back({{1, "bc" + s}, {2, "cb" + s}});
        X.points.push_back({{2, "ca" + s}, {0, "ac" + s}});
    }
    return X;
}

DualGraphCurve parse_dual_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid graph JSON: ") + e.what());
    }
    DualGraphCurve X;
    if (!j.is_object() || !j.contains("components") || !j.contains("points"))
        throw std::invalid_argument("graph JSON needs 'components' and 'points'");
    X.components = j.at("components").get<std::size_t>();
    for (const auto& pt : j.at("points")) {
        std::vector<DualGraphCurve::Branch> branches;
        for (const auto& br : pt) {
            if (!br.is_array() || br.size() != 2)
                throw std::invalid_argument("each branch must be [component, tag]");
            branches.push_back({br.at(0).get<std::size_t>(), br.at(1).get<std::string>()});
        }
        X.points.push_back(std::move(branches));
    }
    X.validate();
    return X;
}

std::string dual_graph_to_json(const DualGraphCurve& X) {
    nlohmann::ordered_json j;
    j["components"] = X.components;
    j["points"] = nlohmann::json::array();
    for (const auto& pt : X.points) {
        nlohmann::ordered_json p = nlohmann::ordered_json::array();
        for (const auto& br : pt) {
            nlohmann::ordered_json branch = nlohmann::ordered_json::array();
            branch.push_back(br.first);
            branch.push_back(br.second);
            p.push_back(std::move(branch));
        }
        j["points"].push_back(std::move(p));
    }
    return j.dump();
}

}  // namespace deforma
