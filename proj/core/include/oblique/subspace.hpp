#pragma once

#include "oblique/numcore.hpp"

namespace oblique {

/// A subspace of C^n held as an orthonormal basis (n x k, k possibly 0)
/// together with a snapshot of the tolerance profile that produced it.
class Subspace {
public:
    /// Column space of an arbitrary spanning matrix; rank decided by the
    /// singular-value cutoff. The zero matrix yields the zero subspace.
    static Subspace from_spanning(const Matrix& m, const ToleranceProfile& tol);

    /// Wrap an already orthonormal basis (validated: basis* basis = I).
    static Subspace from_orthonormal(Matrix basis, const ToleranceProfile& tol);

    static Subspace zero(Index ambient_dim, const ToleranceProfile& tol);
    static Subspace full(Index ambient_dim, const ToleranceProfile& tol);

    Index ambient_dim() const { return basis_.rows(); }
    Index dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const ToleranceProfile& tol() const { return tol_; }

    /// Orthogonal projector basis * basis* onto this subspace.
    Matrix projector() const { return basis_ * basis_.adjoint(); }

private:
    Subspace(Matrix basis, const ToleranceProfile& tol) : basis_(std::move(basis)), tol_(tol) {}
    Matrix basis_;
    ToleranceProfile tol_;
};

/// Orthogonal complement.
Subspace complement(const Subspace& s);

/// Span of the union. Throws AmbientMismatch.
Subspace sum(const Subspace& s, const Subspace& t);

/// Intersection, computed as (S^perp + T^perp)^perp so that the one rank
/// policy governs it.
Subspace intersect(const Subspace& s, const Subspace& t);

/// s ominus n := s ∩ n^perp (orthogonal complement of n inside s).
Subspace ominus(const Subspace& s, const Subspace& n);

/// Null space of a matrix under the rank policy.
Subspace kernel(const Matrix& m, const ToleranceProfile& tol);

/// Range (column space) of a matrix.
inline Subspace range_of(const Matrix& m, const ToleranceProfile& tol) {
    return Subspace::from_spanning(m, tol);
}

/// Full preimage A^{-1}(T) = ker((I - P_T) A). Always contains ker A.
/// A must be square with ambient_dim(T) rows.
Subspace preimage(const Matrix& a, const Subspace& t, const ToleranceProfile& tol);

/// Equality as subspaces: ||P_S - P_T|| <= tol.eq. Bases are never compared.
bool subspace_equal(const Subspace& s, const Subspace& t);

/// inner ⊆ outer, checked as ||(I - P_outer) basis(inner)|| <= tol.eq.
bool subspace_contains(const Subspace& outer, const Subspace& inner);

/// Cosine of the Friedrichs angle: the common intersection is removed from
/// both operands and the norm of the product of the reduced orthogonal
/// projectors is taken. Returns 0 when either reduced part is zero.
double friedrichs_cos(const Subspace& s, const Subspace& t);

}  // namespace oblique
