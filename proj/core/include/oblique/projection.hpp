#pragma once

#include "oblique/subspace.hpp"

namespace oblique {

/// A validated idempotent with cached range and kernel bases.
/// Invariants checked at construction:
///   ||Q^2 - Q|| <= tol.eq * max(1, ||Q||)
///   range = R(Q), kernel = ker Q (as subspaces)
///   dim range + dim kernel = n
class Projection {
public:
    /// Build from a square matrix; range and kernel are derived
    /// (R(Q) by rank-revealing SVD, ker Q = R(I - Q)).
    static Projection from_matrix(const Matrix& q, const ToleranceProfile& tol);

    /// Build from precomputed parts; all invariants are validated.
    static Projection from_parts(Matrix q, Subspace range, Subspace kernel,
                                 const ToleranceProfile& tol);

    const Matrix& matrix() const { return q_; }
    const Subspace& range() const { return range_; }
    const Subspace& kernel() const { return kernel_; }
    Index dim() const { return q_.rows(); }
    const ToleranceProfile& tol() const { return tol_; }

    /// Selfadjoint (orthogonal) within tol.eq?
    bool is_orthogonal() const;

    double norm() const { return operator_norm(q_); }

private:
    Projection(Matrix q, Subspace range, Subspace kernel, const ToleranceProfile& tol)
        : q_(std::move(q)), range_(std::move(range)), kernel_(std::move(kernel)), tol_(tol) {}
    Matrix q_;
    Subspace range_;
    Subspace kernel_;
    ToleranceProfile tol_;
};

/// Orthogonal projector onto S.
Projection orth_projector(const Subspace& s);

}  // namespace oblique
