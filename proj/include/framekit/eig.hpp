#pragma once

#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

/// Eigendecomposition of a Hermitian matrix: a = V diag(lambda) V^H with
/// eigenvalues ascending and V unitary.
struct HermitianEig {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors; // columns
};

/// Cyclic complex Jacobi on the symmetrized input (a + a^H)/2.
///
/// Throws ShapeError for non-square input, NotHermitianError when the
/// asymmetry exceeds 1e-12 * ||a||_F, ConvergenceError when the off-diagonal
/// mass has not dropped below 1e-14 * ||a||_F within 60 sweeps.
HermitianEig hermitian_eig(const CMatrix& a);

/// Solve a x = b for Hermitian positive definite a via Cholesky.
/// Throws NotHpdError when a pivot falls to or below 1e-13 * ||a||_F.
CMatrix hpd_solve(const CMatrix& a, const CMatrix& b);
CVector hpd_solve(const CMatrix& a, const CVector& b);
CMatrix hpd_inverse(const CMatrix& a);

/// Largest singular value, sqrt(lambda_max(a^H a)).
double operator_norm_2(const CMatrix& a);

/// Smallest singular value, sqrt(lambda_min(a^H a)).
double smallest_singular_value(const CMatrix& a);

} // namespace framekit
