#include "oblique/matrix.hpp"

#include <cmath>

#include "oblique/errors.hpp"
#include "oblique/matrix_io.hpp"
#include "oblique/numcore.hpp"

namespace oblique {

bool all_finite(const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

double operator_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return svd(m).sigma(0);
}

bool approx_equal(const Matrix& x, const Matrix& y, double tol_eq) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if (x.rows() == 0 || x.cols() == 0) return true;
    return operator_norm(x - y) <= tol_eq * eq_scale(operator_norm(y));
}

HermitianMatrix::HermitianMatrix(Matrix m, const ToleranceProfile& tol)
    : m_(std::move(m)), psd_(std::nullopt) {
    if (m_.rows() != m_.cols()) {
        throw ShapeMismatch("HermitianMatrix: matrix must be square");
    }
    if (!all_finite(m_)) {
        throw Error("HermitianMatrix: entries must be finite");
    }
    if (m_.rows() > 0) {
        const double asym = operator_norm(m_ - m_.adjoint().eval());
        if (asym > tol.eq * eq_scale(operator_norm(m_))) {
            throw Error("HermitianMatrix: matrix is not selfadjoint (||M - M*|| = " +
                        std::to_string(asym) + ")");
        }
    }
}

HermitianMatrix HermitianMatrix::psd(Matrix m, const ToleranceProfile& tol, double scale) {
    HermitianMatrix h(std::move(m), tol);
    if (h.dim() > 0) {
        const double lo = min_hermitian_eigenvalue(h.matrix());
        const double bound = tol.rank * std::max(operator_norm(h.matrix()), scale);
        if (lo < -bound) {
            throw NotPositive("HermitianMatrix::psd: smallest eigenvalue " +
                              format_double(lo) + " below " + format_double(-bound));
        }
    }
    h.psd_ = true;
    return h;
}

bool HermitianMatrix::is_psd(const ToleranceProfile& tol) const {
    if (psd_.has_value()) return *psd_;
    if (dim() == 0) return true;
    return min_hermitian_eigenvalue(m_) >= -tol.rank * operator_norm(m_);
}

}  // namespace oblique
