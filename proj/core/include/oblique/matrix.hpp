#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "oblique/tolerance.hpp"

namespace oblique {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

bool all_finite(const Matrix& m);

/// Largest singular value; 0 for empty matrices.
double operator_norm(const Matrix& m);

/// Residual scale used by the relative equality policy: max(1, ||ref||).
inline double eq_scale(double ref_norm) { return ref_norm > 1.0 ? ref_norm : 1.0; }

/// ||x - y|| <= tol_eq * max(1, ||y||), with y acting as the reference.
bool approx_equal(const Matrix& x, const Matrix& y, double tol_eq);

/// A square matrix validated to be selfadjoint at construction.
/// The stored matrix is the raw input; validation checks
/// ||M - M*|| <= tol.eq * max(1, ||M||).
class HermitianMatrix {
public:
    HermitianMatrix(Matrix m, const ToleranceProfile& tol);

    /// Construct and additionally verify positive semidefiniteness:
    /// smallest eigenvalue >= -tol.rank * max(||M||, scale). The scale
    /// hint lets callers validate a near-zero result of a larger
    /// computation against the computation's own scale. Throws NotPositive.
    static HermitianMatrix psd(Matrix m, const ToleranceProfile& tol, double scale = 0.0);

    const Matrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }

    /// PSD verdict; uses the cached flag when the matrix was built via psd().
    bool is_psd(const ToleranceProfile& tol) const;

    std::optional<bool> psd_flag() const { return psd_; }

private:
    HermitianMatrix(Matrix m, std::optional<bool> psd) : m_(std::move(m)), psd_(psd) {}
    Matrix m_;
    std::optional<bool> psd_;
};

}  // namespace oblique
