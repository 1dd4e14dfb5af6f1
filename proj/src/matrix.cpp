#include "jdet/matrix.hpp"

#include <cmath>

namespace jdet {

double frobenius_norm(const Matrix& m) {
    double sum = 0.0;
    for (double v : m.data()) sum += v * v;
    return std::sqrt(sum);
}

}  // namespace jdet
