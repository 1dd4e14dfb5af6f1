#include "jdet/kmeans.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "jdet/rng.hpp"

namespace jdet {

namespace {

double row_squared_distance(const Matrix& rows, std::size_t i, const Matrix& centroids,
                            std::size_t c) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rows.cols(); ++j) {
        const double diff = rows(i, j) - centroids(c, j);
        sum += diff * diff;
    }
    return sum;
}

// Nearest centroid per row; ties go to the lowest centroid index.
std::vector<int> assign_labels(const Matrix& rows, const Matrix& centroids) {
    std::vector<int> labels(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        int best = 0;
        double best_d = row_squared_distance(rows, i, centroids, 0);
        for (std::size_t c = 1; c < centroids.rows(); ++c) {
            const double d = row_squared_distance(rows, i, centroids, c);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        labels[i] = best;
    }
    return labels;
}

double total_cost(const Matrix& rows, const std::vector<int>& labels, const Matrix& centroids) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        sum += row_squared_distance(rows, i, centroids, static_cast<std::size_t>(labels[i]));
    }
    return sum;
}

void check_monotone(double current, double previous) {
    if (current > previous + 1e-9 * std::max(1.0, std::abs(previous))) {
        throw std::logic_error("k-means objective increased across an iteration");
    }
}

// Mean update. Empty clusters are re-seeded onto the point currently farthest
// from its centroid (the point is relabeled so the cluster is non-empty);
// stale means left behind by a steal are cleaned up by the next assignment.
void update_centroids(const Matrix& rows, std::vector<int>& labels, Matrix& centroids) {
    const std::size_t k = centroids.rows();
    const std::size_t d = rows.cols();
    std::vector<std::size_t> counts(k, 0);
    Matrix sums(k, d);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        ++counts[c];
        for (std::size_t j = 0; j < d; ++j) sums(c, j) += rows(i, j);
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) centroids(c, j) = sums(c, j) / counts[c];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        std::size_t farthest = rows.rows();
        double farthest_d = -1.0;
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            if (counts[static_cast<std::size_t>(labels[i])] < 2) continue;
            const double dist =
                row_squared_distance(rows, i, centroids, static_cast<std::size_t>(labels[i]));
            if (dist > farthest_d) {
                farthest_d = dist;
                farthest = i;
            }
        }
        // k <= n guarantees a donor cluster with at least two members.
        assert(farthest < rows.rows());
        --counts[static_cast<std::size_t>(labels[farthest])];
        labels[farthest] = static_cast<int>(c);
        counts[c] = 1;
        for (std::size_t j = 0; j < d; ++j) centroids(c, j) = rows(farthest, j);
    }
}

}  // namespace

Matrix kmeans_pp_seed(const Matrix& rows, int k, std::uint64_t rng_seed) {
    const std::size_t n = rows.rows();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("k must be in [1, n]");
    }
    Rng rng(rng_seed);
    std::vector<std::size_t> chosen;
    std::vector<bool> is_chosen(n, false);
    chosen.reserve(static_cast<std::size_t>(k));

    chosen.push_back(rng.next_below(n));
    is_chosen[chosen[0]] = true;

    std::vector<double> min_d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        min_d2[i] = row_squared_distance(rows, i, rows, chosen[0]);
    }

    while (chosen.size() < static_cast<std::size_t>(k)) {
        double total = 0.0;
        for (double w : min_d2) total += w;
        std::size_t pick = n;
        if (total > 0.0) {
            const double target = rng.next_double() * total;
            double acc = 0.0;
            std::size_t last_positive = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (min_d2[i] <= 0.0) continue;
                last_positive = i;
                acc += min_d2[i];
                if (acc > target) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = last_positive;  // fp round-off fell off the end
        } else {
            // Every remaining row duplicates a chosen centroid; pick uniformly
            // among the rows not yet chosen.
            std::vector<std::size_t> remaining;
            remaining.reserve(n - chosen.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (!is_chosen[i]) remaining.push_back(i);
            }
            pick = remaining[rng.next_below(remaining.size())];
        }
        chosen.push_back(pick);
        is_chosen[pick] = true;
        for (std::size_t i = 0; i < n; ++i) {
            min_d2[i] = std::min(min_d2[i], row_squared_distance(rows, i, rows, pick));
        }
    }

    Matrix centroids(static_cast<std::size_t>(k), rows.cols());
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        for (std::size_t j = 0; j < rows.cols(); ++j) centroids(c, j) = rows(chosen[c], j);
    }
    return centroids;
}

ClusterAssignment lloyd(const Matrix& rows, const Matrix& initial_centroids, int max_iter) {
    const std::size_t n = rows.rows();
    const std::size_t k = initial_centroids.rows();
    if (n == 0) throw std::invalid_argument("no rows to cluster");
    if (k < 1 || k > n) throw std::invalid_argument("centroid count must be in [1, n]");
    if (initial_centroids.cols() != rows.cols()) {
        throw std::invalid_argument("centroid dimension does not match rows");
    }
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
    for (double v : rows.data()) {
        if (!std::isfinite(v)) throw std::invalid_argument("rows have non-finite entries");
    }

    Matrix centroids = initial_centroids;
    std::vector<int> labels = assign_labels(rows, centroids);
    double prev_objective = std::numeric_limits<double>::infinity();
    int iterations = 0;

    for (int it = 1; it <= max_iter; ++it) {
        iterations = it;
        update_centroids(rows, labels, centroids);
        const double post_update = total_cost(rows, labels, centroids);
        check_monotone(post_update, prev_objective);

        std::vector<int> new_labels = assign_labels(rows, centroids);
        const double post_assign = total_cost(rows, new_labels, centroids);
        check_monotone(post_assign, post_update);
        prev_objective = post_assign;

        const bool fixed_point = (new_labels == labels);
        labels = std::move(new_labels);
        if (fixed_point) break;
    }

    // The assignment step can re-empty a repaired cluster when max_iter runs
    // out mid-oscillation; force every cluster non-empty before returning.
    std::vector<std::size_t> counts(k, 0);
    for (int label : labels) ++counts[static_cast<std::size_t>(label)];
    if (std::find(counts.begin(), counts.end(), std::size_t{0}) != counts.end()) {
        update_centroids(rows, labels, centroids);
        for (std::size_t c = 0; c < k; ++c) {
            double sum_count = 0.0;
            std::vector<double> mean(rows.cols(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (static_cast<std::size_t>(labels[i]) != c) continue;
                sum_count += 1.0;
                for (std::size_t j = 0; j < rows.cols(); ++j) mean[j] += rows(i, j);
            }
            for (std::size_t j = 0; j < rows.cols(); ++j) centroids(c, j) = mean[j] / sum_count;
        }
    }

    ClusterAssignment result;
    result.labels = std::move(labels);
    result.centroids = std::move(centroids);
    result.objective = total_cost(rows, result.labels, result.centroids);
    result.iterations = iterations;
    return result;
}

ClusterAssignment kmeans_best_of(const Matrix& rows, int k, int restarts, int max_iter,
                                 std::uint64_t rng_seed) {
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    ClusterAssignment best;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        const Matrix init = kmeans_pp_seed(rows, k, derive_seed(rng_seed, r));
        ClusterAssignment candidate = lloyd(rows, init, max_iter);
        if (!have_best || candidate.objective < best.objective) {
            best = std::move(candidate);
            have_best = true;
        }
    }
    return best;
}

double exhaustive_kmeans_oracle(const Matrix& rows, int k) {
    const std::size_t n = rows.rows();
    const std::size_t d = rows.cols();
    if (n > 10 || k > 3) {
        throw std::invalid_argument("exhaustive oracle is limited to n <= 10, k <= 3");
    }
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("k must be in [1, n]");
    }

    const auto kk = static_cast<std::size_t>(k);
    std::vector<int> assignment(n, 0);
    double best = std::numeric_limits<double>::infinity();
    for (;;) {
        bool surjective = true;
        for (std::size_t c = 0; c < kk; ++c) {
            if (std::find(assignment.begin(), assignment.end(), static_cast<int>(c)) ==
                assignment.end()) {
                surjective = false;
                break;
            }
        }
        if (surjective) {
            std::vector<double> means(kk * d, 0.0);
            std::vector<std::size_t> counts(kk, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const auto c = static_cast<std::size_t>(assignment[i]);
                ++counts[c];
                for (std::size_t j = 0; j < d; ++j) means[c * d + j] += rows(i, j);
            }
            for (std::size_t c = 0; c < kk; ++c) {
                for (std::size_t j = 0; j < d; ++j) means[c * d + j] /= counts[c];
            }
            double objective = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto c = static_cast<std::size_t>(assignment[i]);
                for (std::size_t j = 0; j < d; ++j) {
                    const double diff = rows(i, j) - means[c * d + j];
                    objective += diff * diff;
                }
            }
            best = std::min(best, objective);
        }
        // next assignment in base-k counting order
        std::size_t pos = 0;
        while (pos < n && assignment[pos] == k - 1) {
            assignment[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++assignment[pos];
    }
    return best;
}

}  // namespace jdet
