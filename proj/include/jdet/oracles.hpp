#pragma once

#include <vector>

#include "jdet/graph.hpp"
#include "jdet/matrix.hpp"

namespace jdet::oracles {

// Brute-force references used to cross-check the spectral path in tests.
// Deliberately share no numeric code with the graph/eigensolver/kmeans
// modules, so agreement between the two routes is evidence rather than
// tautology. Not linked into the shipped detection path.

struct ComponentLabeling {
    std::vector<int> labels;  // component id per node, numbered by first occurrence
    int count = 0;
};

/// Union-find over the strictly positive off-diagonal entries of the
/// similarity graph.
ComponentLabeling connected_components(const SimilarityGraph& graph);

/// K-means objective recomputed from scratch: per-cluster mean centroids,
/// then the total squared distance of each row to its cluster mean.
double objective_eval(const Matrix& rows, const std::vector<int>& labels);

}  // namespace jdet::oracles
