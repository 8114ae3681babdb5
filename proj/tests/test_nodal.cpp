#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deforma/nodal.hpp"
#include "testutil.hpp"

#include <set>
#include <string>

using namespace deforma;
using testutil::Rng;

namespace {

// random connected dual graph: spanning-tree nodes first, then extra
// points (nodes or multi-branch) with globally unique branch tags
DualGraphCurve random_graph(Rng& rng) {
    DualGraphCurve X;
    X.components = static_cast<std::size_t>(rng.range(1, 5));
    std::size_t tag = 0;
    auto branch = [&](std::size_t c) {
        return DualGraphCurve::Branch{c, "t" + std::to_string(tag++)};
    };
    for (std::size_t c = 1; c < X.components; ++c) {
        std::size_t other = static_cast<std::size_t>(rng.range(0, static_cast<long>(c) - 1));
        X.points.push_back({branch(c), branch(other)});
    }
    long extra = rng.range(X.components == 1 ? 1 : 0, 4);
    for (long k = 0; k < extra; ++k) {
        std::size_t m = static_cast<std::size_t>(rng.range(2, 4));
        std::vector<DualGraphCurve::Branch> pt;
        for (std::size_t b = 0; b < m; ++b)
            pt.push_back(branch(static_cast<std::size_t>(
                rng.range(0, static_cast<long>(X.components) - 1))));
        X.points.push_back(std::move(pt));
    }
    return X;
}

MarkedPoint fin(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("graph validation rejects malformed input") {
    DualGraphCurve empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    DualGraphCurve one_branch{1, {{{0, "a"}}}};
    CHECK_THROWS_AS(one_branch.validate(), std::invalid_argument);

    DualGraphCurve reused{1, {{{0, "a"}, {0, "a"}}}};
    CHECK_THROWS_AS(reused.validate(), std::invalid_argument);

    DualGraphCurve out_of_range{1, {{{0, "a"}, {3, "b"}}}};
    CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);

    DualGraphCurve disconnected{2, {}};
    CHECK_THROWS_AS(disconnected.validate(), std::invalid_argument);

    CHECK_NOTHROW(two_p1_curve(3).validate());
    CHECK_NOTHROW(self_nodal_curve(0).validate());
}

TEST_CASE("line bundle cohomology on the projective line") {
    CHECK(p1_cohomology(0) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(p1_cohomology(2) == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(p1_cohomology(-1) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(p1_cohomology(-2) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(p1_cohomology(-5) == std::pair<std::size_t, std::size_t>{0, 4});
    for (long d = -20; d <= 20; ++d) {
        auto [h0, h1] = p1_cohomology(d);
        // Riemann-Roch on P^1: chi = d + 1
        CHECK(static_cast<long>(h0) - static_cast<long>(h1) == d + 1);
    }
}

TEST_CASE("arithmetic genus of the worked families") {
    for (std::size_t g = 0; g <= 8; ++g)
        CHECK(arithmetic_genus(self_nodal_curve(g)) == g);
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(arithmetic_genus(two_p1_curve(n)) == n - 1);
    CHECK(arithmetic_genus(three_chain_curve()) == 1);
    for (std::size_t m = 3; m <= 8; ++m)
        CHECK(arithmetic_genus(three_star_curve(m)) == m - 3);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(arithmetic_genus(three_pairwise_curve(n)) == 3 * n - 2);
}

TEST_CASE("irreducible rational curve with g nodes") {
    auto check = [](std::size_t g, std::size_t h1, std::size_t ext1) {
        auto r = deformation_report(self_nodal_curve(g));
        CHECK(r.genus == g);
        CHECK(r.h1_tangent == h1);
        CHECK(r.local_t1_sum == g);
        CHECK(r.ext1_dim == ext1);
        CHECK_FALSE(r.formula_extrapolated);
        auto d = nodal_rational_dims(g);
        CHECK(d.h1_equisingular == h1);
        CHECK(d.local_sum == g);
        CHECK(d.ext1 == ext1);
    };
    check(1, 0, 1);
    check(2, 1, 3);
    check(5, 7, 12);
}

TEST_CASE("two lines through n points") {
    for (std::size_t n = 3; n <= 10; ++n) {
        auto r = deformation_report(two_p1_curve(n));
        CHECK(r.genus == n - 1);
        CHECK(r.h1_tangent == 2 * (n - 3));
        CHECK(r.local_t1_sum == n);
        CHECK(r.ext1_dim == 3 * n - 6);
        CHECK_FALSE(r.formula_extrapolated);
        // matches the smooth-curve count 3g - 3 in this range
        CHECK(r.ext1_dim == 3 * r.genus - 3);
    }
    auto r1 = deformation_report(two_p1_curve(1));
    CHECK(r1.genus == 0);
    CHECK(r1.ext1_dim == 1);
}

TEST_CASE("chain of three components with a self-node") {
    auto r = deformation_report(three_chain_curve());
    CHECK(r.genus == 1);
    CHECK(r.component_degrees == std::vector<std::size_t>{2, 3, 1});
    CHECK(r.h1_tangent == 0);
    CHECK(r.local_t1_sum == 3);
    CHECK(r.ext1_dim == 3);
    CHECK_FALSE(r.formula_extrapolated);
}

TEST_CASE("three components through one m-fold point") {
    for (std::size_t m = 3; m <= 12; ++m) {
        auto r = deformation_report(three_star_curve(m));
        CHECK(r.genus == m - 3);
        CHECK(r.component_degrees == std::vector<std::size_t>{1, m - 2, 1});
        CHECK(r.local_t1_sum == m - 1);
        std::size_t expected_h1 = m >= 5 ? m - 5 : 0;
        CHECK(r.h1_tangent == expected_h1);
        std::size_t expected_ext1 = m <= 5 ? m - 1 : 2 * m - 6;
        CHECK(r.ext1_dim == expected_ext1);
        CHECK_FALSE(r.formula_extrapolated);
    }
}

TEST_CASE("three components with n nodes between each pair") {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto r = deformation_report(three_pairwise_curve(n));
        CHECK(r.genus == 3 * n - 2);
        CHECK(r.component_degrees == std::vector<std::size_t>(3, 2 * n));
        CHECK(r.h1_tangent == 6 * n - 9);
        CHECK(r.local_t1_sum == 3 * n);
        CHECK(r.ext1_dim == 9 * n - 9);
        CHECK_FALSE(r.formula_extrapolated);
        CHECK(r.ext1_dim == 3 * r.genus - 3);
    }
    auto r1 = deformation_report(three_pairwise_curve(1));
    CHECK(r1.genus == 1);
    CHECK(r1.h1_tangent == 0);
    CHECK(r1.ext1_dim == 3);
}

TEST_CASE("stability") {
    CHECK_FALSE(deformation_report(self_nodal_curve(1)).stable);   // genus 1
    CHECK(deformation_report(self_nodal_curve(2)).stable);
    CHECK_FALSE(deformation_report(two_p1_curve(2)).stable);       // h0 > 0
    CHECK(deformation_report(two_p1_curve(4)).stable);
    CHECK(deformation_report(three_pairwise_curve(2)).stable);
    CHECK_FALSE(deformation_report(three_chain_curve()).stable);   // genus 1
}

TEST_CASE("dimension identity on random graphs") {
    Rng rng(29);
    for (int k = 0; k < 200; ++k) {
        DualGraphCurve X = random_graph(rng);
        auto r = deformation_report(X);
        CHECK(r.ext1_dim == r.h1_tangent + r.local_t1_sum);
        CHECK(r.genus == arithmetic_genus(X));
        // chi(tangent sheaf restricted to the normalization)
        long chi = 0;
        for (std::size_t d : r.component_degrees)
            chi += 3 - static_cast<long>(d);
        CHECK(static_cast<long>(r.h0_tangent) - static_cast<long>(r.h1_tangent) == chi);
    }
}

TEST_CASE("self-glued curves match the closed-form dimensions") {
    for (std::size_t g = 0; g <= 50; ++g) {
        auto r = deformation_report(self_nodal_curve(g));
        auto d = nodal_rational_dims(g);
        CHECK(r.h1_tangent == d.h1_equisingular);
        CHECK(r.local_t1_sum == d.local_sum);
        CHECK(r.ext1_dim == d.ext1);
    }
}

TEST_CASE("two-component curves obey the 3g - 3 law from genus 2 on") {
    for (std::size_t n = 3; n <= 50; ++n) {
        auto r = deformation_report(two_p1_curve(n));
        CHECK(r.ext1_dim == 3 * r.genus - 3);
    }
}

TEST_CASE("evaluation matrix and its rank") {
    MarkedPointList three{{fin(0), fin(1), PointAtInfinity{}}};
    QMatrix M = eval_matrix(three);
    CHECK(M.rows() == 3);
    CHECK(M.cols() == 3);
    CHECK(M.at(0, 0) == 1);
    CHECK(M.at(1, 1) == 1);
    CHECK(M.at(2, 2) == 1);
    CHECK(M.at(0, 2) == 0);
    CHECK(M.at(1, 2) == 0);

    auto a = eval_rank_analysis(three);
    CHECK(a.rank == 3);
    REQUIRE(a.witness_columns.has_value());
    CHECK(*a.witness_columns == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(a.witness_minor != 0);

    auto g1 = eval_rank_analysis(MarkedPointList{{fin(2), PointAtInfinity{}}});
    CHECK(g1.rank == 2);
    CHECK(g1.degeneracy == EvalRankAnalysis::Degeneracy::GenusOne);

    auto g0 = eval_rank_analysis(MarkedPointList{{}});
    CHECK(g0.rank == 0);
    CHECK(g0.degeneracy == EvalRankAnalysis::Degeneracy::GenusZero);

    MarkedPointList dup{{fin(1), fin(1)}};
    CHECK_THROWS_AS(eval_matrix(dup), std::invalid_argument);
    MarkedPointList two_inf{{PointAtInfinity{}, PointAtInfinity{}}};
    CHECK_THROWS_AS(eval_matrix(two_inf), std::invalid_argument);
}

TEST_CASE("Vandermonde minor identity on random triples") {
    Rng rng(53);
    for (int k = 0; k < 100; ++k) {
        Rational u = rng.rational(20, 6), v = rng.rational(20, 6), w = rng.rational(20, 6);
        if (u == v || v == w || u == w) continue;
        auto a = eval_rank_analysis(MarkedPointList{{u, v, w}});
        CHECK(a.rank == 3);
        CHECK(a.witness_minor == (v - u) * (w - u) * (w - v));

        // with the third point at infinity the minor drops to (v - u)
        auto b = eval_rank_analysis(MarkedPointList{{u, v, PointAtInfinity{}}});
        CHECK(b.rank == 3);
        CHECK(b.witness_minor == v - u);
    }
}

TEST_CASE("any three or more distinct points give full rank") {
    Rng rng(61);
    for (int k = 0; k < 50; ++k) {
        std::size_t n = static_cast<std::size_t>(rng.range(3, 7));
        MarkedPointList pts;
        std::set<Rational> used;
        bool with_inf = rng.range(0, 1) == 1;
        if (with_inf) pts.points.push_back(PointAtInfinity{});
        while (pts.points.size() < n) {
            Rational t = rng.rational(30, 4);
            if (used.insert(t).second) pts.points.push_back(t);
        }
        CHECK(eval_rank_analysis(pts).rank == 3);
    }
}

TEST_CASE("graph JSON round-trip") {
    DualGraphCurve X = three_chain_curve();
    std::string text = dual_graph_to_json(X);
    DualGraphCurve Y = parse_dual_graph_json(text);
    CHECK(Y.components == X.components);
    CHECK(Y.points == X.points);
    CHECK(dual_graph_to_json(Y) == text);

    Rng rng(71);
    for (int k = 0; k < 30; ++k) {
        DualGraphCurve G = random_graph(rng);
        DualGraphCurve H = parse_dual_graph_json(dual_graph_to_json(G));
        CHECK(H.components == G.components);
        CHECK(H.points == G.points);
    }

    CHECK_THROWS_AS(parse_dual_graph_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dual_graph_json("{\"components\": 2}"), std::invalid_argument);
    // malformed branch entry
    CHECK_THROWS_AS(parse_dual_graph_json(
                        "{\"components\": 1, \"points\": [[[0], [0, \"b\"]]]}"),
                    std::invalid_argument);
    // fails validation: disconnected
    CHECK_THROWS_AS(parse_dual_graph_json("{\"components\": 2, \"points\": []}"),
                    std::invalid_argument);
}

TEST_CASE("extrapolation flag") {
    CHECK_FALSE(deformation_report(three_star_curve(7)).formula_extrapolated);
    CHECK_FALSE(deformation_report(two_p1_curve(9)).formula_extrapolated);

    // four components glued pairwise in a cycle: nodal but not covered
    DualGraphCurve cycle;
    cycle.components = 4;
    for (std::size_t i = 0; i < 4; ++i) {
        std::size_t j = (i + 1) % 4;
        cycle.points.push_back({{i, "f" + std::to_string(i)}, {j, "g" + std::to_string(i)}});
    }
    CHECK(deformation_report(cycle).formula_extrapolated);

    // two multi-branch points on two components
    DualGraphCurve twostars;
    twostars.components = 2;
    twostars.points.push_back({{0, "a"}, {1, "b"}, {0, "c"}});
    twostars.points.push_back({{0, "d"}, {1, "e"}, {1, "f"}});
    CHECK(deformation_report(twostars).formula_extrapolated);
}
