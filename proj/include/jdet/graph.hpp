#pragma once

#include "jdet/matrix.hpp"
#include "jdet/types.hpp"

#include <vector>

namespace jdet {

// Symmetric non-negative affinity matrix with per-node degrees. Self-loops
// carry weight 1, so every degree is >= 1 and the degree matrix is invertible.
struct SimilarityGraph {
    Matrix weights;               // n x n, entries in [0, 1]
    std::vector<double> degrees;  // row sums of weights

    std::size_t size() const { return degrees.size(); }
};

struct LaplacianMatrix {
    Matrix entries;  // n x n symmetric, spectrum in [0, 2]

    std::size_t size() const { return entries.rows(); }
};

/// RBF affinities: weights(i,j) = exp(-sigma * |x_i - x_j|^2), zeroed when the
/// value falls below `floor`. Diagonal stays at 1. Flooring is what turns
/// far-apart wall clusters into separate graph components; without it the RBF
/// graph is fully connected and component counting degenerates to 1.
/// Throws on an empty cloud.
SimilarityGraph build_adjacency(const PointCloud& cloud, double sigma, double floor);

/// Symmetric normalized Laplacian: entries(i,j) = delta_ij - w_ij / sqrt(d_i d_j).
LaplacianMatrix normalized_laplacian(const SimilarityGraph& graph);

}  // namespace jdet
