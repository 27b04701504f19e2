#pragma once

#include <cstdint>

#include "oblique/projector.hpp"

namespace oblique {

enum class ShortedRoute { block, projection, compatible };

/// Sigma(P, A): the maximum of { X >= 0 : X <= A, R(X) ⊆ S^perp }.
/// d_witness is the reduced solution of a^{1/2} x = b in the block
/// coordinates of S; route records which computation produced sigma.
struct ShortedResult {
    HermitianMatrix sigma;
    Matrix d_witness;
    ShortedRoute route;
};

/// Block route: sigma = (0 0; 0 c - d*d) with d the reduced solution of
/// a^{1/2} x = b. Throws NotPositive unless A >= 0.
ShortedResult shorted(const HermitianMatrix& a, const Subspace& s,
                      const ToleranceProfile& tol);

/// Projection route: sigma = A^{1/2} P_M A^{1/2} with M = A^{-1/2}(S^perp).
/// Cross-checked against the block route before returning (SelfCheckError
/// on disagreement).
ShortedResult shorted_via_projection(const HermitianMatrix& a, const Subspace& s,
                                     const ToleranceProfile& tol);

/// Compatibility route: sigma = A (1 - E) for E the distinguished
/// A-selfadjoint projection onto S. Validated selfadjoint PSD, checked
/// against the other two routes, and the range identity
/// R(sigma) = R(A) ∩ S^perp is verified.
ShortedResult shorted_compatible(const HermitianMatrix& a, const Subspace& s,
                                 const ToleranceProfile& tol);

/// Detailed minorant verdict for a PSD candidate X.
struct MinorantVerdict {
    bool leq_a;             // X <= A
    bool range_in_s_perp;   // R(X) ⊆ S^perp
    bool leq_sigma;         // X <= Sigma(P, A)
};

MinorantVerdict minorant_verdict(const HermitianMatrix& a, const Subspace& s,
                                 const HermitianMatrix& x, const ToleranceProfile& tol);

/// True only when X is a minorant (X <= A, R(X) ⊆ S^perp) that is
/// dominated by the shorted operator; false otherwise.
bool minorant_check(const HermitianMatrix& a, const Subspace& s,
                    const HermitianMatrix& x, const ToleranceProfile& tol);

/// The infimum of { R* A R : R idempotent, ker R = S } is attained at
/// Q = 1 - p_as(A, S). Returns Q and the verdict of the verification:
/// Q* A Q = Sigma(P, A) and Sigma <= R* A R for `samples` random
/// idempotents R with kernel S.
struct InfimumResult {
    Projection q;
    bool attained;
};

InfimumResult infimum_attained(const HermitianMatrix& a, const Subspace& s,
                               const ToleranceProfile& tol, int samples = 50,
                               std::uint64_t seed = 1);

/// S is admissible for A iff ker Sigma(P, A) = S.
bool is_admissible(const HermitianMatrix& a, const Subspace& s,
                   const ToleranceProfile& tol);

}  // namespace oblique
