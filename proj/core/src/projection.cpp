#include "oblique/projection.hpp"

#include "oblique/errors.hpp"

namespace oblique {

namespace {

void validate_projection(const Matrix& q, const Subspace& range, const Subspace& kernel,
                         const ToleranceProfile& tol) {
    if (q.rows() != q.cols()) {
        throw ShapeMismatch("Projection: matrix must be square");
    }
    const Index n = q.rows();
    if (range.ambient_dim() != n || kernel.ambient_dim() != n) {
        throw AmbientMismatch("Projection: range/kernel ambient dimension mismatch");
    }
    const double scale = eq_scale(operator_norm(q));
    if (operator_norm(q * q - q) > tol.eq * scale) {
        throw Error("Projection: matrix is not idempotent");
    }
    if (range.dim() + kernel.dim() != n) {
        throw Error("Projection: dim range + dim kernel != ambient dimension");
    }
    // R(Q) = range: Q fixes range pointwise and P_range reproduces Q.
    if (range.dim() > 0 &&
        operator_norm(q * range.basis() - range.basis()) > tol.eq * scale) {
        throw Error("Projection: declared range is not fixed by the matrix");
    }
    if (operator_norm(range.projector() * q - q) > tol.eq * scale) {
        throw Error("Projection: matrix does not map into the declared range");
    }
    if (kernel.dim() > 0 && operator_norm(q * kernel.basis()) > tol.eq * scale) {
        throw Error("Projection: declared kernel is not annihilated");
    }
}

}  // namespace

Projection Projection::from_matrix(const Matrix& q, const ToleranceProfile& tol) {
    if (q.rows() != q.cols()) {
        throw ShapeMismatch("Projection: matrix must be square");
    }
    const Index n = q.rows();
    Subspace range = Subspace::from_spanning(q, tol);
    Subspace kern = Subspace::from_spanning(Matrix::Identity(n, n) - q, tol);
    return from_parts(q, std::move(range), std::move(kern), tol);
}

Projection Projection::from_parts(Matrix q, Subspace range, Subspace kernel,
                                  const ToleranceProfile& tol) {
    validate_projection(q, range, kernel, tol);
    return Projection(std::move(q), std::move(range), std::move(kernel), tol);
}

bool Projection::is_orthogonal() const {
    if (dim() == 0) return true;
    return operator_norm(q_ - q_.adjoint().eval()) <= tol_.eq * eq_scale(operator_norm(q_));
}

Projection orth_projector(const Subspace& s) {
    return Projection::from_parts(s.projector(), s, complement(s), s.tol());
}

}  // namespace oblique
