#include "doctest.h"

#include <cmath>
#include <limits>

#include "lipext/errors.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/rng.hpp"

using namespace lipext;

TEST_CASE("validate_metric accepts a plain two-point metric") {
    const auto report = validate_metric({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(report.is_metric);
    CHECK(report.duplicate_pairs.empty());
    CHECK(report.worst_triangle_violation == 0.0);
}

TEST_CASE("validate_metric flags coincident points") {
    const auto report = validate_metric({{0.0, 0.0}, {0.0, 0.0}});
    CHECK_FALSE(report.is_metric);
    REQUIRE(report.duplicate_pairs.size() == 1);
    CHECK(report.duplicate_pairs[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("validate_metric finds the worst triangle violation") {
    // d(0,2) = 3 exceeds d(0,1) + d(1,2) = 2 by exactly 1.
    const auto report = validate_metric({{0.0, 1.0, 3.0}, {1.0, 0.0, 1.0}, {3.0, 1.0, 0.0}});
    CHECK_FALSE(report.is_metric);
    CHECK(report.worst_triangle_violation == doctest::Approx(1.0));
    CHECK(report.worst_triple[0] == 0);
    CHECK(report.worst_triple[1] == 2);
    CHECK(report.worst_triple[2] == 1);
}

TEST_CASE("validate_metric default tolerance scales with the diameter") {
    auto matrix_with_violation = [](double excess) {
        return std::vector<std::vector<double>>{
            {0.0, 1.0, 2.0 + excess}, {1.0, 0.0, 1.0}, {2.0 + excess, 1.0, 0.0}};
    };
    CHECK(validate_metric(matrix_with_violation(1e-10)).is_metric);
    CHECK_FALSE(validate_metric(matrix_with_violation(1e-6)).is_metric);
}

TEST_CASE("validate_metric rejects structural defects outright") {
    CHECK_THROWS_AS(validate_metric({{0.0, 1.0}}), NonSquareMatrix);
    CHECK_THROWS_AS(validate_metric({{0.0, -1.0}, {-1.0, 0.0}}), NegativeDistance);
    CHECK_THROWS_AS(validate_metric({{0.0, 1.0}, {2.0, 0.0}}), AsymmetricMatrix);
    CHECK_THROWS_AS(validate_metric({{0.5, 1.0}, {1.0, 0.0}}), NonzeroDiagonal);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_metric({{0.0, nan}, {nan, 0.0}}), NonFiniteValue);
    CHECK_THROWS_AS(validate_metric({}), EmptySpace);
}

TEST_CASE("matrix_space builds valid metrics and rejects broken ones") {
    const auto space = matrix_space({{0.0, 2.0}, {2.0, 0.0}});
    CHECK(space.size() == 2);
    CHECK(space.dist(0, 1) == 2.0);
    CHECK(space.origin() == OriginKind::matrix);

    CHECK_THROWS_AS(matrix_space({{0.0, 1.0, 3.0}, {1.0, 0.0, 1.0}, {3.0, 1.0, 0.0}}),
                    NotAMetric);
    CHECK_THROWS_AS(matrix_space({{0.0, 0.0}, {0.0, 0.0}}), NotAMetric);
}

TEST_CASE("one-point spaces are fine, empty ones are not") {
    const auto space = matrix_space({{0.0}});
    CHECK(space.size() == 1);
    CHECK(diameter(space) == 0.0);
    CHECK_THROWS_AS(euclidean_space({}), EmptySpace);
    CHECK_THROWS_AS(graph_space(0, {}), EmptySpace);
}

TEST_CASE("euclidean_space computes pairwise norms") {
    const auto line = euclidean_space({{0.0}, {3.0}, {4.0}});
    CHECK(line.dist(0, 2) == 4.0);
    CHECK(line.dist(1, 2) == 1.0);
    CHECK(diameter(line) == 4.0);

    const auto plane = euclidean_space({{0.0, 0.0}, {3.0, 4.0}});
    CHECK(plane.dist(0, 1) == 5.0);
    CHECK(plane.origin() == OriginKind::euclidean);
}

TEST_CASE("euclidean_space rejects malformed input") {
    CHECK_THROWS_AS(euclidean_space({{0.0}, {0.0}}), DuplicatePoint);
    CHECK_THROWS_AS(euclidean_space({{0.0, 1.0}, {0.0}}), DimensionMismatch);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(euclidean_space({{0.0}, {inf}}), NonFiniteValue);
}

TEST_CASE("random euclidean clouds validate as metrics") {
    auto rng = make_rng(12345);
    std::vector<std::vector<double>> coords(100, std::vector<double>(3));
    for (auto& point : coords)
        for (double& c : point) c = uniform_unit(rng);
    const auto space = euclidean_space(coords);
    const auto report = validate_metric(space);
    CHECK(report.is_metric);
}

TEST_CASE("graph_space runs shortest paths through shortcuts") {
    // Direct edge 0-2 of weight 5 loses to the two-hop path through 1.
    const auto space = graph_space(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 5.0}});
    CHECK(space.dist(0, 2) == 2.0);
    CHECK(space.dist(0, 1) == 1.0);
    CHECK(space.origin() == OriginKind::graph);
}

TEST_CASE("graph_space handles the trivial and degenerate graphs") {
    const auto single = graph_space(1, {});
    CHECK(single.size() == 1);
    CHECK(single.dist(0, 0) == 0.0);

    // Parallel edges: the lighter one wins. Self-loops change nothing.
    const auto multi = graph_space(2, {{0, 1, 3.0}, {0, 1, 1.0}, {1, 1, 9.0}});
    CHECK(multi.dist(0, 1) == 1.0);
}

TEST_CASE("graph_space rejects broken inputs") {
    CHECK_THROWS_AS(graph_space(3, {{0, 1, 1.0}}), DisconnectedGraph);
    CHECK_THROWS_AS(graph_space(2, {{0, 1, 0.0}}), NonpositiveWeight);
    CHECK_THROWS_AS(graph_space(2, {{0, 1, -1.0}}), NonpositiveWeight);
    CHECK_THROWS_AS(graph_space(2, {{0, 2, 1.0}}), IndexOutOfRange);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(graph_space(2, {{0, 1, nan}}), NonFiniteValue);
}

TEST_CASE("graph distance matrices are exactly symmetric") {
    auto rng = make_rng(777);
    std::vector<GraphEdge> edges;
    const int n = 40;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(rng() % v), v, 0.1 + 0.9 * uniform_unit(rng)});
    for (int extra = 0; extra < 60; ++extra) {
        const int u = uniform_index(rng, n);
        const int v = uniform_index(rng, n);
        if (u != v) edges.push_back({u, v, 0.1 + 0.9 * uniform_unit(rng)});
    }
    const auto space = graph_space(n, edges);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(space.dist(i, j) == space.dist(j, i));
    CHECK(validate_metric(space).is_metric);
}

TEST_CASE("labels travel with the space and must match its size") {
    const auto space = euclidean_space({{0.0}, {1.0}}, std::vector<std::string>{"a", "b"});
    REQUIRE(space.labels().has_value());
    CHECK((*space.labels())[1] == "b");
    CHECK_THROWS_AS(euclidean_space({{0.0}, {1.0}}, std::vector<std::string>{"a"}),
                    DimensionMismatch);
}

TEST_CASE("origin kind names round-trip") {
    for (const auto kind : {OriginKind::matrix, OriginKind::euclidean, OriginKind::graph,
                            OriginKind::poincare_disk}) {
        const auto back = origin_kind_from_name(origin_kind_name(kind));
        REQUIRE(back.has_value());
        CHECK(*back == kind);
    }
    CHECK_FALSE(origin_kind_from_name("triangle").has_value());
}
