#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "jdet/eigensolver.hpp"
#include "jdet/graph.hpp"
#include "jdet/kmeans.hpp"
#include "jdet/oracles.hpp"
#include "jdet/rng.hpp"
#include "support.hpp"

using namespace jdet;

namespace {

Matrix rows_from(const std::vector<std::vector<double>>& data) {
    Matrix m(data.size(), data.empty() ? 0 : data[0].size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = 0; j < data[i].size(); ++j) m(i, j) = data[i][j];
    }
    return m;
}

Matrix random_rows(Rng& rng, std::size_t n, std::size_t d, double span) {
    Matrix m(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.next_double() * span;
    }
    return m;
}

}  // namespace

TEST_CASE("k=1 seeding picks one of the rows") {
    const Matrix rows = rows_from({{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Matrix centroid = kmeans_pp_seed(rows, 1, seed);
        REQUIRE(centroid.rows() == 1);
        bool found = false;
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            found = found || (centroid(0, 0) == rows(i, 0) && centroid(0, 1) == rows(i, 1));
        }
        CHECK(found);
    }
}

TEST_CASE("identical rows fall back to a uniform second pick") {
    const Matrix rows = rows_from({{2.0, 2.0}, {2.0, 2.0}, {2.0, 2.0}});
    const Matrix centroids = kmeans_pp_seed(rows, 2, 5);
    REQUIRE(centroids.rows() == 2);
    CHECK(centroids(0, 0) == 2.0);
    CHECK(centroids(1, 0) == 2.0);
}

TEST_CASE("seeding splits two far groups almost surely") {
    // Monte-Carlo check of the squared-distance sampling law.
    std::vector<std::vector<double>> data;
    Rng jitter(1);
    for (int i = 0; i < 5; ++i) {
        data.push_back({jitter.next_double() * 0.1, jitter.next_double() * 0.1});
    }
    for (int i = 0; i < 5; ++i) {
        data.push_back({100.0 + jitter.next_double() * 0.1, 100.0 + jitter.next_double() * 0.1});
    }
    const Matrix rows = rows_from(data);

    int split = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Matrix centroids = kmeans_pp_seed(rows, 2, seed);
        const bool a_low = centroids(0, 0) < 50.0;
        const bool b_low = centroids(1, 0) < 50.0;
        if (a_low != b_low) ++split;
    }
    CHECK(split >= 990);
}

TEST_CASE("k=1 lloyd returns the mean and the total squared deviation") {
    const Matrix rows = rows_from({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}, {2.0, 2.0}});
    const ClusterAssignment result = lloyd(rows, kmeans_pp_seed(rows, 1, 0), 100);
    CHECK(result.centroids(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(result.centroids(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    // independent evaluation: each point is distance sqrt(2) from the mean
    CHECK(result.objective == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("two tight pairs cluster to the enumerated optimum") {
    const Matrix rows = rows_from({{0.0, 0.0}, {0.1, 0.0}, {5.0, 5.0}, {5.1, 5.0}});
    const ClusterAssignment result = kmeans_best_of(rows, 2, 10, 100, 0);
    CHECK(result.labels[0] == result.labels[1]);
    CHECK(result.labels[2] == result.labels[3]);
    CHECK(result.labels[0] != result.labels[2]);
    const double optimum = exhaustive_kmeans_oracle(rows, 2);
    CHECK(result.objective == doctest::Approx(optimum).epsilon(1e-12));
}

TEST_CASE("an already-optimal start converges in one iteration") {
    const Matrix rows = rows_from({{0.0, 0.0}, {0.1, 0.0}, {5.0, 5.0}, {5.1, 5.0}});
    const Matrix init = rows_from({{0.05, 0.0}, {5.05, 5.0}});
    const ClusterAssignment result = lloyd(rows, init, 100);
    CHECK(result.iterations == 1);
    CHECK(result.labels == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("one restart equals a single seeded run") {
    Rng rng(77);
    const Matrix rows = random_rows(rng, 12, 2, 10.0);
    const ClusterAssignment wrapped = kmeans_best_of(rows, 3, 1, 100, 42);
    const ClusterAssignment direct =
        lloyd(rows, kmeans_pp_seed(rows, 3, derive_seed(42, 0)), 100);
    CHECK(wrapped.labels == direct.labels);
    CHECK(wrapped.objective == direct.objective);
}

TEST_CASE("equal seeds reproduce bit-identical clusterings") {
    Rng rng(88);
    const Matrix rows = random_rows(rng, 30, 3, 5.0);
    const ClusterAssignment a = kmeans_best_of(rows, 4, 10, 100, 1234);
    const ClusterAssignment b = kmeans_best_of(rows, 4, 10, 100, 1234);
    CHECK(a.labels == b.labels);
    CHECK(a.objective == b.objective);
    CHECK(a.centroids == b.centroids);
}

TEST_CASE("clustering a three-component embedding recovers the components") {
    Rng rng(555);
    const testutil::BlobCloud blobs = testutil::random_blob_cloud(rng, 90, 3);
    const SimilarityGraph graph = build_adjacency(blobs.cloud, 1.5, 1e-8);
    const SpectralDecomposition dec = eigendecompose(normalized_laplacian(graph));
    const int k = count_zero_eigenvalues(dec, 1e-8);
    REQUIRE(k == blobs.blob_count);
    const SpectralEmbedding embedding = spectral_embed(dec, k);
    const ClusterAssignment clusters = kmeans_best_of(embedding.rows, k, 10, 100, 0);
    const oracles::ComponentLabeling components = oracles::connected_components(graph);
    CHECK(testutil::same_partition(clusters.labels, components.labels));
}

TEST_CASE("cluster objective matches an independent recomputation") {
    Rng rng(91);
    const Matrix rows = random_rows(rng, 25, 2, 8.0);
    const ClusterAssignment result = kmeans_best_of(rows, 3, 5, 100, 7);
    const double recomputed = oracles::objective_eval(rows, result.labels);
    CHECK(result.objective ==
          doctest::Approx(recomputed).epsilon(1e-9));
    std::set<int> used(result.labels.begin(), result.labels.end());
    CHECK(used.size() == 3);  // no empty cluster
}

TEST_CASE("exhaustive oracle handles the trivial and tiny cases") {
    // two singletons: centroid == point, objective exactly zero
    CHECK(exhaustive_kmeans_oracle(rows_from({{1.0, 0.0}, {2.0, 0.0}}), 2) == 0.0);
    // three collinear points spaced 1 apart: best 2-split groups a near pair
    const double split = exhaustive_kmeans_oracle(rows_from({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}), 2);
    CHECK(split == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exhaustive oracle rejects big instances") {
    Rng rng(3);
    CHECK_THROWS_AS(exhaustive_kmeans_oracle(random_rows(rng, 11, 2, 1.0), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_kmeans_oracle(random_rows(rng, 5, 2, 1.0), 4),
                    std::invalid_argument);
}

TEST_CASE("restarted k-means never undershoots the exhaustive optimum") {
    Rng rng(2024);
    int attained = 0;
    const int trials = 40;
    for (int trial = 0; trial < trials; ++trial) {
        const int k = 1 + static_cast<int>(rng.next_below(3));
        const std::size_t n =
            static_cast<std::size_t>(k) + rng.next_below(static_cast<std::size_t>(9 - k));
        const Matrix rows = random_rows(rng, n, 2, 10.0);
        const double optimum = exhaustive_kmeans_oracle(rows, k);
        const ClusterAssignment result = kmeans_best_of(rows, k, 10, 100, trial);
        CHECK(result.objective >= optimum - 1e-9 * std::max(1.0, optimum));
        if (result.objective <= optimum + 1e-6 * std::max(1.0, optimum)) ++attained;
    }
    CHECK(attained >= trials * 9 / 10);
}
