#pragma once

#include <cstdint>
#include <vector>

#include "jdet/matrix.hpp"

namespace jdet {

struct ClusterAssignment {
    std::vector<int> labels;  // per-row cluster id in [0, k)
    Matrix centroids;         // k x d
    double objective = 0.0;   // sum of squared distances to assigned centroid
    int iterations = 0;
};

/// K-means++ seeding: first centroid uniform over rows, each further centroid
/// drawn with probability proportional to the squared distance to the nearest
/// centroid chosen so far. When all remaining weights are zero (duplicate
/// rows), falls back to a uniform pick among unchosen rows. Deterministic for
/// a fixed seed.
Matrix kmeans_pp_seed(const Matrix& rows, int k, std::uint64_t rng_seed);

/// Lloyd iteration to a label fixed point: assign to the nearest centroid
/// (ties to the lowest centroid index), recompute means, repeat. Empty
/// clusters are re-seeded onto the point farthest from its centroid. The
/// objective is non-increasing across iterations and the returned assignment
/// has no empty cluster.
ClusterAssignment lloyd(const Matrix& rows, const Matrix& initial_centroids, int max_iter);

/// Runs seed + lloyd `restarts` times with child seeds derived from rng_seed
/// and keeps the smallest objective; ties go to the earliest restart.
ClusterAssignment kmeans_best_of(const Matrix& rows, int k, int restarts, int max_iter,
                                 std::uint64_t rng_seed);

/// Exact optimum by enumerating every surjective assignment of n rows to k
/// clusters with centroid = cluster mean. Only feasible tiny: throws unless
/// n <= 10 and k <= 3.
double exhaustive_kmeans_oracle(const Matrix& rows, int k);

}  // namespace jdet
