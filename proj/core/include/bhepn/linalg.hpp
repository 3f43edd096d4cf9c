#pragma once

#include <vector>

#include "bhepn/complex_matrix.hpp"

namespace bhepn::linalg {

/// Relative singular-value cutoff used when no explicit tolerance is passed.
/// Matrix entries in this toolkit are O(N) combinations of square roots of
/// integers, so true zeros degrade only at machine-epsilon scale.
inline constexpr double kDefaultRankTol = 1e-8;

/// Dense eigenproblems are only supported up to this dimension.
inline constexpr int kMaxEigenDim = 64;

/// Schur decomposition m = u * t * u^H with t upper triangular, u unitary.
struct SchurDecomposition {
    ComplexMatrix t;
    ComplexMatrix u;
};

/// Hessenberg reduction followed by shifted QR iteration. Throws
/// ConvergenceError if a subdiagonal entry fails to deflate within the
/// iteration budget (never returns silent garbage).
SchurDecomposition schur_decompose(const ComplexMatrix& m, bool want_vectors);

/// Eigenvalues with multiplicity, order unspecified. Square input, n <= 64.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

struct EigenDecomposition {
    std::vector<Complex> values;
    ComplexMatrix vectors;  // column j is a unit right eigenvector for values[j]
};

/// Eigenvalues plus right eigenvectors via Schur form and triangular
/// back-substitution. Intended for diagonalizable input; near-defective
/// directions come out as nearly parallel columns, which is exactly what the
/// coalescence analysis measures.
EigenDecomposition eigen_decompose(const ComplexMatrix& m);

/// Singular value decomposition m = u * diag(sigma) * v^H, singular values
/// descending. One-sided Jacobi; u is square unitary for square input.
struct SingularValueDecomposition {
    ComplexMatrix u;
    std::vector<double> singular_values;
    ComplexMatrix v;
};

SingularValueDecomposition svd(const ComplexMatrix& m);

/// Count of singular values above tol * sigma_max. The zero matrix has rank 0.
int numerical_rank(const ComplexMatrix& m, double tol = kDefaultRankTol);

/// Minimum-norm particular solution of a*x = rhs for square a, possibly
/// rank-deficient. Throws NumericalError with the residual if the system is
/// inconsistent.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs);

}  // namespace bhepn::linalg
