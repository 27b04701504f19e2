#pragma once

#include <cstdint>
#include <optional>

#include "oblique/blocks.hpp"
#include "oblique/douglas.hpp"
#include "oblique/projection.hpp"

namespace oblique {

/// Independent verdicts for the equivalent characterizations of
/// compatibility of a selfadjoint A with a subspace S. The three
/// conditions must always agree; disagreement is a defect, not a state.
struct CompatibilityReport {
    bool compatible;     // = cond_block (the defining route)
    bool cond_range_pa;  // R(PA) = R(PAP) as subspaces
    bool cond_block;     // R(b) ⊆ R(a) in block coordinates
    bool cond_sum;       // S + A^{-1}(S^perp) = C^n
    bool unique;         // S ⊕ A^{-1}(S^perp) = C^n (direct sum)
    Index n_dim;         // dim N, N = S ∩ A^{-1}(S^perp)
    Matrix a;            // block witnesses
    Matrix b;
    std::optional<Matrix> d;  // reduced solution of a x = b, when compatible
};

/// The three routes for deciding A-selfadjointness of an idempotent Q:
///   equation          : A Q = Q* A
///   kernel_inclusion  : ker Q ⊆ A^{-1}(R(Q)^perp)
///   psd_order         : Q* A Q <= A           (meaningful when A >= 0)
struct ASelfadjointChecks {
    bool equation;
    bool kernel_inclusion;
    std::optional<bool> psd_order;
};

ASelfadjointChecks a_selfadjoint_checks(const HermitianMatrix& a, const Projection& q,
                                        const ToleranceProfile& tol);

/// True iff ||A Q - Q* A|| <= tol.eq * max(1, ||A||).
bool is_a_selfadjoint(const HermitianMatrix& a, const Projection& q,
                      const ToleranceProfile& tol);

/// Evaluate every compatibility condition by an independent computation.
/// For PSD A the report always says compatible.
CompatibilityReport compatibility(const HermitianMatrix& a, const Subspace& s,
                                  const ToleranceProfile& tol);

/// The distinguished A-selfadjoint projection with range S, built from the
/// reduced solution d of the block equation a x = b as (1 d; 0 0) and
/// conjugated back to standard coordinates. Throws NotCompatible.
Projection p_as(const HermitianMatrix& a, const Subspace& s, const ToleranceProfile& tol);

/// Closed formula P (PAP + (1-P)A(1-P))^{-1} A, valid for positive
/// definite A. Throws NotInvertible when A is not definite.
Projection p_as_invertible(const HermitianMatrix& a, const Subspace& s,
                           const ToleranceProfile& tol);

/// Parametrization of the affine manifold of all A-selfadjoint projections
/// with range S: every member is base + z with z mapping S^perp into N.
/// For PSD A the free space N is ker A ∩ S; for indefinite compatible A the
/// free directions are ker(a-block) ∩ S instead, and psd_case is false to
/// flag that the PSD identification of N does not apply.
struct ManifoldParam {
    Projection base;
    Subspace n_space;
    Subspace s_perp;
    bool psd_case;
};

ManifoldParam manifold(const HermitianMatrix& a, const Subspace& s,
                       const ToleranceProfile& tol);

/// Member base + embed(z). z is a dim(N) x dim(S^perp) coefficient block
/// against the bases stored in the parametrization.
Projection manifold_member(const ManifoldParam& param, const Matrix& z,
                           const ToleranceProfile& tol);

/// Offset between the parallel manifolds of two PSD operators with the
/// same range: Delta = p_as(B,S) - p_as(A,S). Membership of translated
/// members is verified on `samples` random parameters. Throws
/// RangeMismatch when R(A) != R(B).
Matrix parallel_offset(const HermitianMatrix& a, const HermitianMatrix& b,
                       const Subspace& s, const ToleranceProfile& tol,
                       int samples = 20, std::uint64_t seed = 1);

}  // namespace oblique
