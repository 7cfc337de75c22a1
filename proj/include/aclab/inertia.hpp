#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "aclab/types.hpp"

namespace aclab {

using SparseMatrixC = Eigen::SparseMatrix<Complex>;

// Inertia of the Hermitian matrix K - sigma M.
struct Inertia {
    int negative = 0;
    int zero = 0; // pivots below 1e-14 relative
    int positive = 0;
    bool dense_fallback = false;
};

// Sparse LDL^H with AMD ordering; a failed or near-singular factorization falls back to a dense
// Hermitian eigendecomposition when the dimension is at most `dense_limit`.
Inertia pencil_inertia(const SparseMatrixC& K, const SparseMatrixC& M, double sigma, int dense_limit = 4000);

// A shift with no eigenvalue of (K, M) below it, found by doubling from -start.
double spectrum_lower_bound(const SparseMatrixC& K, const SparseMatrixC& M, double start);

// The k lowest eigenvalues of the pencil by shift-invert Lanczos with full reorthogonalization
// in the M-inner product; `sigma` must lie below the spectrum.
std::vector<double> lowest_eigenvalues(const SparseMatrixC& K, const SparseMatrixC& M, int k, double sigma);

} // namespace aclab
