#include "oblique/numcore.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "oblique/errors.hpp"
#include "oblique/matrix_io.hpp"

namespace oblique {

SvdResult svd(const Matrix& m) {
    if (!all_finite(m)) {
        throw Error("svd: entries must be finite");
    }
    if (m.rows() == 0 || m.cols() == 0) {
        return {Matrix::Identity(m.rows(), m.rows()), RealVector::Zero(0),
                Matrix::Identity(m.cols(), m.cols())};
    }
    Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success) {
        throw ConvergenceFailure("svd: decomposition did not converge");
    }
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Index numerical_rank(const RealVector& sigma, const ToleranceProfile& tol) {
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    // Cutoff relative to max(1, sigma_max): a matrix that is pure roundoff
    // noise from a larger computation must come out as rank zero.
    const double cutoff = tol.rank * eq_scale(sigma(0));
    Index r = 0;
    while (r < sigma.size() && sigma(r) >= cutoff) ++r;
    return r;
}

Matrix pinv(const Matrix& m, const ToleranceProfile& tol) {
    if (m.rows() == 0 || m.cols() == 0) {
        return Matrix::Zero(m.cols(), m.rows());
    }
    const SvdResult dec = svd(m);
    const Index r = numerical_rank(dec.sigma, tol);
    Matrix inv = Matrix::Zero(m.cols(), m.rows());
    for (Index i = 0; i < r; ++i) {
        inv += (1.0 / dec.sigma(i)) * dec.v.col(i) * dec.u.col(i).adjoint();
    }
    return inv;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeMismatch("hermitian_eigenvalues: matrix must be square");
    }
    if (m.rows() == 0) return RealVector::Zero(0);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw ConvergenceFailure("hermitian_eigenvalues: eigensolver did not converge");
    }
    return es.eigenvalues();
}

double min_hermitian_eigenvalue(const Matrix& m) {
    const RealVector ev = hermitian_eigenvalues(m);
    return ev.size() == 0 ? 0.0 : ev(0);
}

bool psd_leq(const Matrix& x, const Matrix& y, const ToleranceProfile& tol) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw ShapeMismatch("psd_leq: operands must have equal shape");
    }
    if (x.rows() == 0) return true;
    const Matrix diff = y - x;
    return min_hermitian_eigenvalue(diff) >= -tol.rank * eq_scale(operator_norm(y));
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a, const ToleranceProfile& tol) {
    const Index n = a.dim();
    if (n == 0) return a;
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
    if (es.info() != Eigen::Success) {
        throw ConvergenceFailure("psd_sqrt: eigensolver did not converge");
    }
    const RealVector ev = es.eigenvalues();
    const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));  // = ||A||
    const double cutoff = tol.rank * scale;
    RealVector roots(n);
    for (Index i = 0; i < n; ++i) {
        if (ev(i) < -cutoff) {
            throw NotPositive("psd_sqrt: eigenvalue " + format_double(ev(i)) +
                              " below the PSD floor " + format_double(-cutoff));
        }
        // Eigenvalues inside the rank band are zeroed, not rooted: the
        // square root would lift sub-cutoff noise across the rank cutoff
        // and later pseudoinverses would amplify it by 1/sqrt(noise).
        roots(i) = ev(i) > cutoff ? std::sqrt(ev(i)) : 0.0;
    }
    Matrix s = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
    // Roundoff in the conjugation can leave a tiny skew part; remove it so
    // the result passes Hermitian validation at any tolerance.
    s = 0.5 * (s + s.adjoint().eval());
    return HermitianMatrix::psd(std::move(s), tol);
}

}  // namespace oblique
