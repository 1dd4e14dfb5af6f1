#pragma once

#include "jdet/graph.hpp"
#include "jdet/matrix.hpp"

#include <vector>

namespace jdet {

// Full eigendecomposition of a symmetric matrix. eigenvalues are sorted
// non-decreasing; eigenvectors holds the matching orthonormal eigenvectors as
// columns.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    std::size_t size() const { return eigenvalues.size(); }
};

// Rows of the first-k-eigenvector matrix; row i is the embedded coordinate of
// point i.
struct SpectralEmbedding {
    Matrix rows;  // n x k
    std::size_t k = 0;
};

/// Dense symmetric eigendecomposition: Householder tridiagonalization followed
/// by implicit-shift QL iteration with accumulated transforms. Off-diagonals
/// are considered converged below 1e-12 * |input|_F. Throws std::runtime_error
/// if an eigenvalue fails to settle within the iteration budget.
SpectralDecomposition eigendecompose(const LaplacianMatrix& laplacian);
SpectralDecomposition eigendecompose_symmetric(const Matrix& symmetric);

/// Number of eigenvalues with |lambda| <= tol. For a normalized Laplacian this
/// is the connected-component count of the underlying graph.
int count_zero_eigenvalues(const SpectralDecomposition& dec, double tol);

/// First k eigenvector columns as an n x k row matrix. With row_normalize set
/// (the default), each nonzero row is scaled to unit Euclidean norm, which
/// collapses every graph component onto a single direction.
SpectralEmbedding spectral_embed(const SpectralDecomposition& dec, int k,
                                 bool row_normalize = true);

}  // namespace jdet
