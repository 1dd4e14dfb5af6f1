#include "jdet/types.hpp"

#include <stdexcept>
#include <string>

namespace jdet {

PointCloud::PointCloud(std::vector<Point2> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!points_[i].finite()) {
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " has a non-finite coordinate");
        }
    }
}

DetectorParams validate_params(const DetectorParams& params) {
    if (!(params.sigma > 0.0)) {
        throw std::invalid_argument("sigma must be positive");
    }
    if (!(params.similarity_floor >= 0.0 && params.similarity_floor < 1.0)) {
        throw std::invalid_argument("similarity_floor must be in [0, 1)");
    }
    if (!(params.zero_eig_tol > 0.0)) {
        throw std::invalid_argument("zero_eig_tol must be positive");
    }
    if (params.kmeans_max_iter < 1) {
        throw std::invalid_argument("kmeans_max_iter must be at least 1");
    }
    if (params.kmeans_restarts < 1) {
        throw std::invalid_argument("kmeans_restarts must be at least 1");
    }
    return params;
}

}  // namespace jdet
