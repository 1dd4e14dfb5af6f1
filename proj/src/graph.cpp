#include "jdet/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace jdet {

SimilarityGraph build_adjacency(const PointCloud& cloud, double sigma, double floor) {
    const std::size_t n = cloud.size();
    if (n == 0) throw std::invalid_argument("empty point cloud");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (!(floor >= 0.0 && floor < 1.0)) throw std::invalid_argument("floor must be in [0, 1)");

    SimilarityGraph graph;
    graph.weights = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        graph.weights(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double w = std::exp(-sigma * squared_distance(cloud[i], cloud[j]));
            if (w < floor) w = 0.0;
            graph.weights(i, j) = w;
            graph.weights(j, i) = w;
        }
    }
    graph.degrees.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j) d += graph.weights(i, j);
        graph.degrees[i] = d;
    }
    return graph;
}

LaplacianMatrix normalized_laplacian(const SimilarityGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<double> inv_sqrt_degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv_sqrt_degree[i] = 1.0 / std::sqrt(graph.degrees[i]);
    }
    LaplacianMatrix laplacian;
    laplacian.entries = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        laplacian.entries(i, i) = 1.0 - graph.weights(i, i) * inv_sqrt_degree[i] * inv_sqrt_degree[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const double entry = -(graph.weights(i, j) * inv_sqrt_degree[i] * inv_sqrt_degree[j]);
            laplacian.entries(i, j) = entry;
            laplacian.entries(j, i) = entry;
        }
    }
    return laplacian;
}

}  // namespace jdet
