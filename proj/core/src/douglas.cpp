#include "oblique/douglas.hpp"

#include <cmath>

#include "oblique/errors.hpp"

namespace oblique {

namespace {

double inclusion_residual(const Matrix& b, const Matrix& a, const ToleranceProfile& tol) {
    const Index n = a.rows();
    const Matrix pa = Subspace::from_spanning(a, tol).projector();
    const Matrix leak = (Matrix::Identity(n, n) - pa) * b;
    return operator_norm(leak) / eq_scale(operator_norm(b));
}

/// inf{ lambda : B B* <= lambda A A* } by bisection on the PSD ordering.
/// Bracket [0, (||B|| / sigma_min_plus(A))^2 + 1] is guaranteed to contain
/// the infimum whenever R(B) is included in R(A).
double lambda_star_bisection(const Matrix& a, const Matrix& b, const ToleranceProfile& tol) {
    const double b_norm = operator_norm(b);
    if (b_norm == 0.0) return 0.0;

    const SvdResult dec = svd(a);
    const Index r = numerical_rank(dec.sigma, tol);
    if (r == 0) {
        // R(B) ⊆ R(A) = {0} contradicts ||B|| > 0; caller screens this.
        throw RangeNotIncluded("lambda_star: A is zero but B is not", 1.0, false);
    }
    const double sigma_min_plus = dec.sigma(r - 1);

    const Matrix aa = a * a.adjoint();
    const Matrix bb = b * b.adjoint();
    const double aa_norm = operator_norm(aa);
    const double bb_norm = operator_norm(bb);
    // Accept a defect no larger than the eigensolver noise of the matrix
    // actually tested, ~n^2 eps (|lambda| ||AA*|| + ||BB*||). A coarser
    // floor smears the crossing on badly conditioned systems by far more
    // than the bisection resolution.
    const double noise = std::max(
        1e-13, 4.0 * static_cast<double>(a.rows() * a.rows()) *
                   std::numeric_limits<double>::epsilon());
    const auto dominated = [&](double lambda) {
        const double floor = -noise * (lambda * aa_norm + bb_norm);
        return min_hermitian_eigenvalue(lambda * aa - bb) >= floor;
    };

    double lo = 0.0;
    double hi = (b_norm / sigma_min_plus) * (b_norm / sigma_min_plus) + 1.0;
    if (!dominated(hi)) {
        throw SelfCheckError("lambda_star: guaranteed bracket does not dominate");
    }
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (dominated(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

bool range_included(const Matrix& b, const Matrix& a, const ToleranceProfile& tol) {
    if (a.rows() != b.rows()) {
        throw ShapeMismatch("range_included: operands must have equal row counts");
    }
    if (b.cols() == 0 || operator_norm(b) == 0.0) return true;
    return inclusion_residual(b, a, tol) <= tol.eq;
}

Matrix reduced_solution_d(const Matrix& a, const Matrix& b, const ToleranceProfile& tol) {
    if (a.rows() != b.rows()) {
        throw ShapeMismatch("reduced_solution: operands must have equal row counts");
    }
    if (b.cols() > 0 && operator_norm(b) > 0.0) {
        const double residual = inclusion_residual(b, a, tol);
        if (residual > tol.eq) {
            const bool borderline = residual <= 10.0 * tol.eq;
            throw RangeNotIncluded(
                borderline
                    ? "reduced_solution: range inclusion is borderline (residual " +
                          std::to_string(residual) + " within 10x of the threshold)"
                    : "reduced_solution: R(B) is not included in R(A) (residual " +
                          std::to_string(residual) + ")",
                residual, borderline);
        }
    }

    Matrix d = pinv(a, tol) * b;

    // Validate the defining properties before handing the result out.
    if (!approx_equal(a * d, b, tol.eq)) {
        throw SelfCheckError("reduced_solution: A D != B beyond tolerance");
    }
    if (b.cols() > 0) {
        if (!subspace_equal(kernel(d, tol), kernel(b, tol))) {
            throw SelfCheckError("reduced_solution: ker D != ker B");
        }
    }
    if (a.cols() > 0 &&
        !subspace_contains(Subspace::from_spanning(a.adjoint(), tol),
                           Subspace::from_spanning(d, tol))) {
        throw SelfCheckError("reduced_solution: R(D) leaks outside R(A*)");
    }
    return d;
}

ReducedSolutionResult reduced_solution(const Matrix& a, const Matrix& b,
                                       const ToleranceProfile& tol) {
    ReducedSolutionResult out{reduced_solution_d(a, b, tol), 0.0, 0.0};
    const double d_norm = operator_norm(out.d);
    out.norm_sq = d_norm * d_norm;
    out.lambda_star = lambda_star_bisection(a, b, tol);

    // The bisection accepts a PSD defect on the eigensolver noise scale,
    // which moves the crossing by up to ~1e-7 relative on compressed
    // systems; 1e-6 is what the fixed 60-step design can guarantee.
    if (std::abs(out.norm_sq - out.lambda_star) > 1e-6 * eq_scale(out.lambda_star)) {
        throw SelfCheckError("reduced_solution: ||D||^2 and lambda* disagree");
    }
    return out;
}

Projection reduced_idempotent(const Matrix& a, const Projection& q,
                              const ToleranceProfile& tol) {
    if (a.rows() != a.cols() || a.rows() != q.dim()) {
        throw ShapeMismatch("reduced_idempotent: A must be square of the projection's size");
    }
    const ReducedSolutionResult rs = reduced_solution(a, q.matrix() * a, tol);
    // The reduced solution of A X = Q A squares to itself; from_matrix
    // re-validates idempotency.
    return Projection::from_matrix(rs.d, tol);
}

}  // namespace oblique
