#include "jdet/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jdet::oracles {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentLabeling connected_components(const SimilarityGraph& graph) {
    const std::size_t n = graph.size();
    if (n == 0) throw std::invalid_argument("empty graph");

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (graph.weights(i, j) > 0.0) uf.unite(i, j);
        }
    }

    ComponentLabeling labeling;
    labeling.labels.assign(n, -1);
    std::vector<int> root_label(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (root_label[root] < 0) {
            root_label[root] = labeling.count;
            ++labeling.count;
        }
        labeling.labels[i] = root_label[root];
    }
    return labeling;
}

double objective_eval(const Matrix& rows, const std::vector<int>& labels) {
    if (labels.size() != rows.rows()) {
        throw std::invalid_argument("label count does not match row count");
    }
    int k = 0;
    for (int label : labels) {
        if (label < 0) throw std::invalid_argument("negative cluster label");
        k = std::max(k, label + 1);
    }

    const std::size_t d = rows.cols();
    std::vector<double> sums(static_cast<std::size_t>(k) * d, 0.0);
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        ++counts[c];
        for (std::size_t j = 0; j < d; ++j) sums[c * d + j] += rows(i, j);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const double diff = rows(i, j) - sums[c * d + j] / counts[c];
            total += diff * diff;
        }
    }
    return total;
}

}  // namespace jdet::oracles
