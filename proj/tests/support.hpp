#pragma once

// Shared test helpers. The component counter here is breadth-first search so
// it stays independent of both the spectral path and the union-find oracle.

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "jdet/geometry.hpp"
#include "jdet/graph.hpp"
#include "jdet/matrix.hpp"
#include "jdet/rng.hpp"
#include "jdet/scan_sim.hpp"
#include "jdet/types.hpp"

namespace testutil {

inline int bfs_component_count(const jdet::SimilarityGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<bool> visited(n, false);
    int components = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        ++components;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        visited[start] = true;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (v != u && !visited[v] && graph.weights(u, v) > 0.0) {
                    visited[v] = true;
                    frontier.push(v);
                }
            }
        }
    }
    return components;
}

// True when the two labelings induce the same partition of indices.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> forward;
    std::vector<int> backward;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0) return false;
        if (static_cast<std::size_t>(a[i]) >= forward.size()) {
            forward.resize(static_cast<std::size_t>(a[i]) + 1, -1);
        }
        if (static_cast<std::size_t>(b[i]) >= backward.size()) {
            backward.resize(static_cast<std::size_t>(b[i]) + 1, -1);
        }
        int& fwd = forward[static_cast<std::size_t>(a[i])];
        int& bwd = backward[static_cast<std::size_t>(b[i])];
        if (fwd == -1 && bwd == -1) {
            fwd = b[i];
            bwd = a[i];
        } else if (fwd != b[i] || bwd != a[i]) {
            return false;
        }
    }
    return true;
}

struct BlobCloud {
    jdet::PointCloud cloud;
    int blob_count = 0;
    std::vector<int> blob_of_point;
};

// Scattered disk blobs with intra-blob diameter <= 3 m and inter-blob point
// gap >= 5 m: every blob is one connected component at sigma 1.5 / floor 1e-8.
inline BlobCloud random_blob_cloud(jdet::Rng& rng, int max_points = 200, int max_blobs = 6) {
    const int blob_count = 1 + static_cast<int>(rng.next_below(max_blobs));
    constexpr double blob_radius = 1.5;
    constexpr double min_center_gap = 5.0 + 2.0 * blob_radius;

    std::vector<jdet::Point2> centers;
    int attempts = 0;
    while (static_cast<int>(centers.size()) < blob_count) {
        if (++attempts > 10000) throw std::logic_error("blob placement failed");
        const jdet::Point2 candidate{rng.next_double() * 80.0 - 40.0,
                                     rng.next_double() * 80.0 - 40.0};
        const bool clear = std::all_of(centers.begin(), centers.end(), [&](const jdet::Point2& c) {
            return jdet::distance(c, candidate) >= min_center_gap;
        });
        if (clear) centers.push_back(candidate);
    }

    const int total =
        blob_count + static_cast<int>(rng.next_below(max_points - blob_count + 1));
    BlobCloud result;
    result.blob_count = blob_count;
    std::vector<jdet::Point2> points;
    for (int i = 0; i < total; ++i) {
        const int blob = (i < blob_count) ? i : static_cast<int>(rng.next_below(blob_count));
        const double r = blob_radius * std::sqrt(rng.next_double());
        const double theta = 6.283185307179586 * rng.next_double();
        points.push_back(centers[static_cast<std::size_t>(blob)] +
                         jdet::Point2{r * std::cos(theta), r * std::sin(theta)});
        result.blob_of_point.push_back(blob);
    }
    result.cloud = jdet::PointCloud(std::move(points));
    return result;
}

inline jdet::Matrix random_symmetric(jdet::Rng& rng, std::size_t n, double scale = 1.0) {
    jdet::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = (2.0 * rng.next_double() - 1.0) * scale;
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

inline jdet::PointCloud random_cloud(jdet::Rng& rng, std::size_t n, double span = 10.0) {
    std::vector<jdet::Point2> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back({rng.next_double() * span, rng.next_double() * span});
    }
    return jdet::PointCloud(std::move(points));
}

inline double point_to_segment_distance(const jdet::Point2& p, const jdet::Segment& seg) {
    const jdet::Point2 span = seg.b - seg.a;
    const double t =
        std::clamp((p - seg.a).dot(span) / span.squared_norm(), 0.0, 1.0);
    return jdet::distance(p, seg.a + span * t);
}

inline double min_wall_distance(const jdet::Point2& p, const jdet::Environment& env) {
    double best = std::numeric_limits<double>::infinity();
    for (const jdet::Segment& wall : env.walls) {
        best = std::min(best, point_to_segment_distance(p, wall));
    }
    return best;
}

}  // namespace testutil
