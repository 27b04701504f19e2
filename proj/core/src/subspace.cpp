#include "oblique/subspace.hpp"

#include <algorithm>

#include "oblique/errors.hpp"

namespace oblique {

Subspace Subspace::from_spanning(const Matrix& m, const ToleranceProfile& tol) {
    if (m.rows() < 1) {
        throw ShapeMismatch("Subspace: ambient dimension must be >= 1");
    }
    if (m.cols() == 0) {
        return Subspace(Matrix::Zero(m.rows(), 0), tol);
    }
    const SvdResult dec = svd(m);
    const Index r = numerical_rank(dec.sigma, tol);
    return Subspace(dec.u.leftCols(r), tol);
}

Subspace Subspace::from_orthonormal(Matrix basis, const ToleranceProfile& tol) {
    if (basis.rows() < 1) {
        throw ShapeMismatch("Subspace: ambient dimension must be >= 1");
    }
    if (basis.cols() > basis.rows()) {
        throw ShapeMismatch("Subspace: more basis columns than ambient dimension");
    }
    if (basis.cols() > 0) {
        const Matrix gram = basis.adjoint() * basis;
        const Matrix eye = Matrix::Identity(basis.cols(), basis.cols());
        if (operator_norm(gram - eye) > tol.eq) {
            throw Error("Subspace: columns are not orthonormal");
        }
    }
    return Subspace(std::move(basis), tol);
}

Subspace Subspace::zero(Index ambient_dim, const ToleranceProfile& tol) {
    return from_orthonormal(Matrix::Zero(ambient_dim, 0), tol);
}

Subspace Subspace::full(Index ambient_dim, const ToleranceProfile& tol) {
    return from_orthonormal(Matrix::Identity(ambient_dim, ambient_dim), tol);
}

Subspace complement(const Subspace& s) {
    const Index n = s.ambient_dim();
    const Index k = s.dim();
    if (k == 0) return Subspace::full(n, s.tol());
    if (k == n) return Subspace::zero(n, s.tol());
    // The basis has all singular values 1, so the trailing columns of the
    // full-U factor span exactly the orthogonal complement.
    const SvdResult dec = svd(s.basis());
    return Subspace::from_orthonormal(dec.u.rightCols(n - k), s.tol());
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) {
        throw AmbientMismatch("sum: subspaces live in different ambient spaces");
    }
    Matrix stacked(s.ambient_dim(), s.dim() + t.dim());
    stacked << s.basis(), t.basis();
    return Subspace::from_spanning(stacked, s.tol());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) {
        throw AmbientMismatch("intersect: subspaces live in different ambient spaces");
    }
    return complement(sum(complement(s), complement(t)));
}

Subspace ominus(const Subspace& s, const Subspace& n) {
    return intersect(s, complement(n));
}

Subspace kernel(const Matrix& m, const ToleranceProfile& tol) {
    if (m.cols() == 0) {
        throw ShapeMismatch("kernel: matrix must have at least one column");
    }
    if (m.rows() == 0) {
        return Subspace::full(m.cols(), tol);
    }
    const SvdResult dec = svd(m);
    const Index r = numerical_rank(dec.sigma, tol);
    return Subspace::from_orthonormal(dec.v.rightCols(m.cols() - r), tol);
}

Subspace preimage(const Matrix& a, const Subspace& t, const ToleranceProfile& tol) {
    if (a.rows() != a.cols()) {
        throw ShapeMismatch("preimage: operator must be square");
    }
    if (a.rows() != t.ambient_dim()) {
        throw AmbientMismatch("preimage: operator and subspace dimensions differ");
    }
    const Index n = t.ambient_dim();
    const Matrix off = (Matrix::Identity(n, n) - t.projector()) * a;
    return kernel(off, tol);
}

bool subspace_equal(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) return false;
    if (s.dim() != t.dim()) return false;
    if (s.dim() == 0) return true;
    return operator_norm(s.projector() - t.projector()) <= s.tol().eq;
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) return false;
    if (inner.dim() == 0) return true;
    const Index n = outer.ambient_dim();
    const Matrix leak = (Matrix::Identity(n, n) - outer.projector()) * inner.basis();
    return operator_norm(leak) <= outer.tol().eq;
}

double friedrichs_cos(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) {
        throw AmbientMismatch("friedrichs_cos: subspaces live in different ambient spaces");
    }
    const Subspace common = intersect(s, t);
    const Subspace s_red = ominus(s, common);
    const Subspace t_red = ominus(t, common);
    if (s_red.dim() == 0 || t_red.dim() == 0) return 0.0;
    const double c = operator_norm(s_red.projector() * t_red.projector());
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace oblique
