#include "jdet/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "jdet/eigensolver.hpp"
#include "jdet/graph.hpp"
#include "jdet/kmeans.hpp"
#include "jdet/scan_sim.hpp"

namespace jdet {

JunctionReport detect_junctions(const PointCloud& cloud, const DetectorParams& raw_params) {
    const DetectorParams params = validate_params(raw_params);
    if (cloud.empty()) throw std::invalid_argument("empty point cloud");

    const auto start = std::chrono::steady_clock::now();

    const SimilarityGraph graph =
        build_adjacency(cloud, params.sigma, params.similarity_floor);
    const LaplacianMatrix laplacian = normalized_laplacian(graph);
    const SpectralDecomposition dec = eigendecompose(laplacian);
    const int k = count_zero_eigenvalues(dec, params.zero_eig_tol);
    const SpectralEmbedding embedding = spectral_embed(dec, k);
    const ClusterAssignment clusters = kmeans_best_of(
        embedding.rows, k, params.kmeans_restarts, params.kmeans_max_iter, params.rng_seed);

    const auto stop = std::chrono::steady_clock::now();

    JunctionReport report;
    report.num_junctions = k;
    report.labels = clusters.labels;
    const std::size_t head = std::min<std::size_t>(cloud.size(), 10);
    report.eigenvalues_head.assign(dec.eigenvalues.begin(), dec.eigenvalues.begin() + head);
    report.objective = clusters.objective;
    report.runtime = std::chrono::duration<double>(stop - start).count();
    report.all_points_isolated = (cloud.size() > 1 && static_cast<std::size_t>(k) == cloud.size());
    return report;
}

ScenarioResult detect_on_scenario(const std::string& name, const DetectorParams& params,
                                  std::uint64_t seed) {
    const Scenario scenario = builtin_scenario(name);
    const PointCloud cloud = cast_scan(scenario.env, LidarConfig{}, seed);
    return {detect_junctions(cloud, params), scenario.expected_junctions};
}

}  // namespace jdet
