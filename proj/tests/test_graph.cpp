#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jdet/graph.hpp"
#include "support.hpp"

using namespace jdet;

TEST_CASE("coincident points have similarity one") {
    const PointCloud cloud({{2.0, 3.0}, {2.0, 3.0}});
    const SimilarityGraph graph = build_adjacency(cloud, 1.5, 0.0);
    CHECK(graph.weights(0, 1) == 1.0);
    CHECK(graph.weights(0, 0) == 1.0);
    CHECK(graph.degrees[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("unit separation at sigma 1.5 gives exp(-1.5)") {
    // exp(-1.5) evaluated independently
    const PointCloud cloud({{0.0, 0.0}, {1.0, 0.0}});
    const SimilarityGraph graph = build_adjacency(cloud, 1.5, 0.0);
    CHECK(graph.weights(0, 1) == doctest::Approx(0.22313016014842982).epsilon(1e-12));
    CHECK(graph.weights(1, 0) == graph.weights(0, 1));
}

TEST_CASE("weights below the floor are zeroed") {
    // exp(-1.5 * 16) = exp(-24) ~ 3.775e-11 < 1e-8
    const PointCloud cloud({{0.0, 0.0}, {4.0, 0.0}});
    const SimilarityGraph graph = build_adjacency(cloud, 1.5, 1e-8);
    CHECK(graph.weights(0, 1) == 0.0);
    CHECK(graph.weights(0, 0) == 1.0);  // diagonal untouched by the floor
    CHECK(graph.degrees[0] == 1.0);
}

TEST_CASE("adjacency rejects an empty cloud") {
    CHECK_THROWS_AS(build_adjacency(PointCloud{}, 1.5, 1e-8), std::invalid_argument);
}

TEST_CASE("single point Laplacian is the 1x1 zero matrix") {
    const SimilarityGraph graph = build_adjacency(PointCloud({{1.0, 1.0}}), 1.5, 1e-8);
    const LaplacianMatrix laplacian = normalized_laplacian(graph);
    CHECK(laplacian.entries(0, 0) == 0.0);
}

TEST_CASE("coincident pair Laplacian matches hand arithmetic") {
    // W = [[1,1],[1,1]], D = diag(2,2) -> L = [[0.5,-0.5],[-0.5,0.5]]
    const SimilarityGraph graph = build_adjacency(PointCloud({{0.0, 0.0}, {0.0, 0.0}}), 1.5, 0.0);
    const LaplacianMatrix laplacian = normalized_laplacian(graph);
    CHECK(laplacian.entries(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(laplacian.entries(0, 1) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(laplacian.entries(1, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(laplacian.entries(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("fully floored pair gives the zero Laplacian") {
    // W = I, D = I -> L = I - I
    const SimilarityGraph graph = build_adjacency(PointCloud({{0.0, 0.0}, {9.0, 0.0}}), 1.5, 1e-8);
    const LaplacianMatrix laplacian = normalized_laplacian(graph);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(laplacian.entries(i, j) == 0.0);
        }
    }
}

TEST_CASE("Laplacian annihilates the sqrt-degree vector") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud cloud = testutil::random_cloud(rng, 5 + rng.next_below(56), 8.0);
        const SimilarityGraph graph = build_adjacency(cloud, 1.5, 1e-8);
        const LaplacianMatrix laplacian = normalized_laplacian(graph);
        const std::size_t n = graph.size();

        double v_norm_sq = 0.0;
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = std::sqrt(graph.degrees[i]);
            v_norm_sq += v[i] * v[i];
        }
        double lv_norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += laplacian.entries(i, j) * v[j];
            lv_norm_sq += row * row;
        }
        CHECK(std::sqrt(lv_norm_sq) <= 1e-9 * std::sqrt(v_norm_sq));

        for (std::size_t i = 0; i < n; ++i) {
            CHECK(laplacian.entries(i, i) >= 0.0);
            CHECK(laplacian.entries(i, i) <= 1.0);
            CHECK(graph.degrees[i] >= 1.0);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(laplacian.entries(i, j) == laplacian.entries(j, i));
                CHECK(graph.weights(i, j) >= 0.0);
                CHECK(graph.weights(i, j) <= 1.0);
            }
        }
    }
}

TEST_CASE("raising sigma never raises an off-diagonal weight") {
    Rng rng(23);
    const PointCloud cloud = testutil::random_cloud(rng, 40, 6.0);
    const SimilarityGraph loose = build_adjacency(cloud, 0.8, 1e-8);
    const SimilarityGraph tight = build_adjacency(cloud, 2.5, 1e-8);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = 0; j < cloud.size(); ++j) {
            if (i == j) continue;
            CHECK(tight.weights(i, j) <= loose.weights(i, j));
        }
    }
}

TEST_CASE("weights are invariant under rigid motion") {
    Rng rng(31);
    const PointCloud cloud = testutil::random_cloud(rng, 50, 10.0);
    std::vector<Point2> moved;
    for (const Point2& p : cloud.points()) {
        moved.push_back(p.rotated(1.234) + Point2{100.0, -40.0});
    }
    const SimilarityGraph base = build_adjacency(cloud, 1.5, 1e-8);
    const SimilarityGraph transformed = build_adjacency(PointCloud(moved), 1.5, 1e-8);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = 0; j < cloud.size(); ++j) {
            CHECK(std::abs(base.weights(i, j) - transformed.weights(i, j)) <= 1e-12);
        }
    }
}
