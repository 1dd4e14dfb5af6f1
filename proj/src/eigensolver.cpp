#include "jdet/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jdet {

namespace {

constexpr int kMaxQlIterations = 50;

// Householder reduction to tridiagonal form, accumulating the orthogonal
// transform in `a`. On return d holds the diagonal, e the subdiagonal
// (e[0] unused), and the columns of `a` the accumulated basis.
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = a.rows();
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = a(i, j);
                    const double gj = e[j] - hh * f;
                    e[j] = gj;
                    for (std::size_t k = 0; k <= j; ++k) {
                        a(j, k) -= f * e[k] + gj * a(i, k);
                    }
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
                for (std::size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            a(j, i) = 0.0;
            a(i, j) = 0.0;
        }
    }
}

// Implicit-shift QL iteration on the tridiagonal (d, e), rotating the columns
// of `z` along. `off_diag_tol` is the absolute deflation threshold.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, Matrix& z,
                       double off_diag_tol) {
    const std::size_t n = d.size();
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    constexpr double eps = 2.3e-16;
    const auto negligible = [&](std::size_t m) {
        const double local = eps * (std::abs(d[m]) + std::abs(d[m + 1]));
        return std::abs(e[m]) <= std::max(off_diag_tol, local);
    };

    for (std::size_t l = 0; l < n; ++l) {
        int iterations = 0;
        for (;;) {
            std::size_t m = l;
            while (m < n - 1 && !negligible(m)) ++m;
            if (m == l) break;
            if (++iterations > kMaxQlIterations) {
                throw std::runtime_error(
                    "eigendecomposition did not converge for eigenvalue " +
                    std::to_string(l) + " within " + std::to_string(kMaxQlIterations) +
                    " QL iterations");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    f = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * f;
                    z(k, i) = c * z(k, i) - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

SpectralDecomposition eigendecompose_symmetric(const Matrix& symmetric) {
    const std::size_t n = symmetric.rows();
    if (n == 0 || symmetric.cols() != n) {
        throw std::invalid_argument("eigendecompose requires a non-empty square matrix");
    }
    double max_abs = 0.0;
    for (double v : symmetric.data()) {
        if (!std::isfinite(v)) throw std::invalid_argument("matrix has non-finite entries");
        max_abs = std::max(max_abs, std::abs(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(symmetric(i, j) - symmetric(j, i)) > 1e-9 * std::max(1.0, max_abs)) {
                throw std::invalid_argument("matrix is not symmetric");
            }
        }
    }

    SpectralDecomposition dec;
    if (n == 1) {
        dec.eigenvalues = {symmetric(0, 0)};
        dec.eigenvectors = Matrix(1, 1, 1.0);
        return dec;
    }

    Matrix work = symmetric;
    std::vector<double> d(n, 0.0);
    std::vector<double> e(n, 0.0);
    tridiagonalize(work, d, e);
    ql_implicit_shift(d, e, work, 1e-12 * frobenius_norm(symmetric));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    dec.eigenvalues.resize(n);
    dec.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        dec.eigenvalues[j] = d[order[j]];
        for (std::size_t i = 0; i < n; ++i) {
            dec.eigenvectors(i, j) = work(i, order[j]);
        }
    }
    return dec;
}

SpectralDecomposition eigendecompose(const LaplacianMatrix& laplacian) {
    return eigendecompose_symmetric(laplacian.entries);
}

int count_zero_eigenvalues(const SpectralDecomposition& dec, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    int count = 0;
    for (double lambda : dec.eigenvalues) {
        if (std::abs(lambda) <= tol) ++count;
    }
    return count;
}

SpectralEmbedding spectral_embed(const SpectralDecomposition& dec, int k, bool row_normalize) {
    const std::size_t n = dec.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("embedding dimension k must be in [1, n]");
    }
    SpectralEmbedding embedding;
    embedding.k = static_cast<std::size_t>(k);
    embedding.rows = Matrix(n, embedding.k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < embedding.k; ++j) {
            embedding.rows(i, j) = dec.eigenvectors(i, j);
        }
    }
    if (row_normalize) {
        for (std::size_t i = 0; i < n; ++i) {
            double sq = 0.0;
            for (std::size_t j = 0; j < embedding.k; ++j) {
                sq += embedding.rows(i, j) * embedding.rows(i, j);
            }
            if (sq > 0.0) {
                const double inv = 1.0 / std::sqrt(sq);
                for (std::size_t j = 0; j < embedding.k; ++j) embedding.rows(i, j) *= inv;
            }
        }
    }
    return embedding;
}

}  // namespace jdet
