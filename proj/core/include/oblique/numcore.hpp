#pragma once

#include "oblique/matrix.hpp"

namespace oblique {

/// Full singular value decomposition M = U diag(sigma) V*.
/// U is rows x rows unitary, V is cols x cols unitary, sigma nonincreasing.
struct SvdResult {
    Matrix u;
    RealVector sigma;
    Matrix v;
};

SvdResult svd(const Matrix& m);

/// Numerical rank of a nonincreasing singular value vector under the
/// uniform cutoff sigma_i >= tol.rank * sigma_max.
Index numerical_rank(const RealVector& sigma, const ToleranceProfile& tol);

/// Moore-Penrose pseudoinverse with singular values below
/// tol.rank * sigma_max treated as zero.
Matrix pinv(const Matrix& m, const ToleranceProfile& tol);

/// Unique PSD square root. Eigenvalues in [-tol.rank * ||A||, 0) are
/// clamped to zero; anything below that bound raises NotPositive.
HermitianMatrix psd_sqrt(const HermitianMatrix& a, const ToleranceProfile& tol);

/// Eigenvalues of a selfadjoint matrix, ascending. Only the lower
/// triangle of m is read.
RealVector hermitian_eigenvalues(const Matrix& m);

double min_hermitian_eigenvalue(const Matrix& m);

/// PSD ordering x <= y, decided by the smallest eigenvalue of y - x
/// against -tol.rank * max(1, ||y||).
bool psd_leq(const Matrix& x, const Matrix& y, const ToleranceProfile& tol);

}  // namespace oblique
