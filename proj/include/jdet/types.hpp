#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jdet/geometry.hpp"

namespace jdet {

/// Ordered 2D point set from one lidar revolution, sensor at the body-frame
/// origin. Index i identifies the i-th measurement; downstream cluster labels
/// refer back to these indices. Immutable after construction; the constructor
/// rejects non-finite coordinates.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::vector<Point2> points);

    const std::vector<Point2>& points() const { return points_; }
    const Point2& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

private:
    std::vector<Point2> points_;
};

// Detector knobs. sigma is the RBF decay rate in 1/m^2; similarity_floor
// zeroes affinities below it so far-apart walls become disconnected graph
// components; zero_eig_tol separates round-off zeros from genuine eigenvalues.
struct DetectorParams {
    double sigma = 1.5;
    double similarity_floor = 1e-8;
    double zero_eig_tol = 1e-8;
    int kmeans_max_iter = 100;
    int kmeans_restarts = 10;
    std::uint64_t rng_seed = 0;
};

/// Throws std::invalid_argument naming the offending field; returns the
/// params unchanged otherwise.
DetectorParams validate_params(const DetectorParams& params);

/// Result of one end-to-end detection run.
struct JunctionReport {
    int num_junctions = 0;            // k = zero-eigenvalue multiplicity
    std::vector<int> labels;          // per-point cluster id in [0, k)
    std::vector<double> eigenvalues_head;  // first min(n, 10) sorted eigenvalues
    double objective = 0.0;           // final k-means objective
    double runtime = 0.0;             // wall-clock seconds of the full run
    bool all_points_isolated = false; // k == n with n > 1: every point its own component
};

}  // namespace jdet
