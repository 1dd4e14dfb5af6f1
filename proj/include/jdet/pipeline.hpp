#pragma once

#include <cstdint>
#include <string>

#include "jdet/types.hpp"

namespace jdet {

/// End-to-end junction detection on one revolution: RBF similarity graph,
/// normalized Laplacian, eigendecomposition, zero-eigenvalue count k, spectral
/// embedding of the k lowest eigenvectors, k-means++ with restarts. The report
/// carries k, the per-point partition, the head of the spectrum, the k-means
/// objective and the measured wall-clock runtime. Throws on an empty cloud or
/// invalid params.
JunctionReport detect_junctions(const PointCloud& cloud, const DetectorParams& params);

struct ScenarioResult {
    JunctionReport report;
    int expected_junctions = 0;
};

/// Generates a noise-free scan of a builtin scenario (scan seeded with `seed`)
/// and runs detect_junctions on it. Throws on unknown scenario names.
ScenarioResult detect_on_scenario(const std::string& name, const DetectorParams& params,
                                  std::uint64_t seed);

}  // namespace jdet
