#include "oblique/random.hpp"

#include <cmath>
#include <numbers>

#include "oblique/blocks.hpp"
#include "oblique/errors.hpp"

namespace oblique {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t family, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (family + 1) + 0xbf58476d1ce4e5b9ULL * (index + 1);
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform_real(rng, 0.0, 1.0);
    while (u1 <= 0.0) u1 = uniform_real(rng, 0.0, 1.0);
    const double u2 = uniform_real(rng, 0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, bool complex_field) {
    Matrix m(rows, cols);
    const double s = complex_field ? std::numbers::sqrt2 / 2.0 : 1.0;
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double re = standard_normal(rng);
            const double im = complex_field ? standard_normal(rng) : 0.0;
            m(i, j) = Complex(s * re, s * im);
        }
    }
    return m;
}

Matrix random_unitary(std::mt19937_64& rng, Index n, bool complex_field) {
    const Matrix g = random_matrix(rng, n, n, complex_field);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // Fix column phases so the distribution does not depend on the QR
    // sign convention.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return q;
}

Subspace random_subspace(std::mt19937_64& rng, Index n, Index k, bool complex_field,
                         const ToleranceProfile& tol) {
    if (k < 0 || k > n) {
        throw ShapeMismatch("random_subspace: need 0 <= k <= n");
    }
    if (k == 0) return Subspace::zero(n, tol);
    const Matrix u = random_unitary(rng, n, complex_field);
    return Subspace::from_orthonormal(u.leftCols(k), tol);
}

Matrix hermitian_from_spectrum(std::mt19937_64& rng, const RealVector& eigenvalues,
                               bool complex_field) {
    const Index n = eigenvalues.size();
    const Matrix u = random_unitary(rng, n, complex_field);
    Matrix m = u * eigenvalues.cast<Complex>().asDiagonal() * u.adjoint();
    return 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix random_psd(std::mt19937_64& rng, Index n, Index rank, bool complex_field,
                           const ToleranceProfile& tol, double lambda_lo, double lambda_hi) {
    if (rank < 0 || rank > n) {
        throw ShapeMismatch("random_psd: need 0 <= rank <= n");
    }
    RealVector ev = RealVector::Zero(n);
    for (Index i = 0; i < rank; ++i) {
        ev(i) = std::exp(uniform_real(rng, std::log(lambda_lo), std::log(lambda_hi)));
    }
    return HermitianMatrix::psd(hermitian_from_spectrum(rng, ev, complex_field), tol);
}

HermitianMatrix random_indefinite(std::mt19937_64& rng, Index n, bool complex_field,
                                  const ToleranceProfile& tol) {
    RealVector ev(n);
    for (Index i = 0; i < n; ++i) {
        const double mag = std::exp(uniform_real(rng, std::log(0.1), std::log(10.0)));
        ev(i) = (rng() & 1) ? mag : -mag;
    }
    if (n >= 2) {
        ev(0) = std::abs(ev(0));
        ev(1) = -std::abs(ev(1));
    }
    return HermitianMatrix(hermitian_from_spectrum(rng, ev, complex_field), tol);
}

namespace {

Matrix bounded_random_block(std::mt19937_64& rng, Index rows, Index cols, bool complex_field,
                            double norm_cap) {
    if (rows == 0 || cols == 0) return Matrix::Zero(rows, cols);
    Matrix g = random_matrix(rng, rows, cols, complex_field);
    const double g_norm = operator_norm(g);
    if (g_norm > norm_cap) g *= norm_cap / g_norm;
    return g;
}

}  // namespace

Projection random_idempotent_with_kernel(std::mt19937_64& rng, const Subspace& s,
                                         bool complex_field, const ToleranceProfile& tol,
                                         double g_norm_cap) {
    const SplitBasis split(s);
    const Index k = split.k();
    const Index m = split.ambient_dim() - k;
    const Matrix g = bounded_random_block(rng, k, m, complex_field, g_norm_cap);
    const Matrix blk = split.assemble(Matrix::Zero(k, k), g, Matrix::Zero(m, k),
                                      Matrix::Identity(m, m));
    Matrix q = split.from_block(blk);
    Subspace range = Subspace::from_spanning(q, tol);
    return Projection::from_parts(std::move(q), std::move(range), s, tol);
}

Projection random_idempotent_with_range(std::mt19937_64& rng, const Subspace& s,
                                        bool complex_field, const ToleranceProfile& tol,
                                        double x_norm_cap) {
    const SplitBasis split(s);
    const Index k = split.k();
    const Index m = split.ambient_dim() - k;
    const Matrix x = bounded_random_block(rng, k, m, complex_field, x_norm_cap);
    const Matrix blk = split.assemble(Matrix::Identity(k, k), x, Matrix::Zero(m, k),
                                      Matrix::Zero(m, m));
    Matrix q = split.from_block(blk);
    Subspace kern = Subspace::from_spanning(Matrix::Identity(q.rows(), q.rows()) - q, tol);
    return Projection::from_parts(std::move(q), s, std::move(kern), tol);
}

}  // namespace oblique
