#pragma once

#include "oblique/shorted.hpp"

namespace oblique {

/// Norm and structure report for the projection onto R(P) that is
/// symmetric for the form induced by an orthogonal projection Q.
/// When ker Q ∩ R(P) = {0} all three norm expressions agree:
///   ||P_{Q,P}|| = ||(PQP)^{-1}||^{1/2} on S = (1 - ||(1-Q)P||^2)^{-1/2}.
/// Otherwise the inverse/defect columns are taken along the reduced part
/// P_0 of the decomposition (they still equal the norm).
struct TwoProjReport {
    Projection p_qp;
    double norm;
    double norm_via_inverse;
    double norm_via_defect;
    bool kernel_ok;
    bool generic;
};

/// The Q-selfadjoint projection onto R(P). Both arguments must be
/// orthogonal projections (NotHermitianProjection otherwise).
Projection p_qp(const Projection& q, const Projection& p, const ToleranceProfile& tol);

TwoProjReport norm_report(const Projection& q, const Projection& p,
                          const ToleranceProfile& tol);

/// ||(Q|_S)^{-1}|| for the restriction S -> Q(S), materialized against
/// orthonormal bases of S and Q(S); equals 1/sigma_min of that matrix.
/// S = R(P). Requires ker Q ∩ S = {0} (NotInvertible otherwise).
double q_restricted_inverse_norm(const Projection& q, const Projection& p,
                                 const ToleranceProfile& tol);

/// Checks ker P_{Q,P} = Q^{-1}(ker P) ominus (ker Q ∩ R(P)) as subspaces.
bool kernel_characterization(const Projection& q, const Projection& p,
                             const ToleranceProfile& tol);

/// R(Q) ∩ ker P = {0} = ker Q ∩ R(P). When true, additionally verifies
/// R(P_{Q,P}) = R(P) and ker P_{Q,P} = ker Q (SelfCheckError otherwise).
bool generic_position(const Projection& q, const Projection& p,
                      const ToleranceProfile& tol);

/// Splitting P_{Q,P} = P_N + P_{Q,P_0} with N = ker Q ∩ R(P) and
/// P_0 the orthogonal projection onto R(P) ominus N. The sum identity and
/// the norm transfer ||P_{Q,P}|| = ||P_{Q,P_0}|| are verified.
struct TwoProjDecomposition {
    Projection p_n;
    Projection p_qp0;
};

TwoProjDecomposition decompose(const Projection& q, const Projection& p,
                               const ToleranceProfile& tol);

/// The finite-dimensionally contentful pieces of the equivalence battery
/// for a pair of orthogonal projections. Closedness conditions are
/// tautologies here and reported as such.
struct EquivalenceBattery {
    bool compatible_q_s;    // (Q, R(P)) compatible
    bool compatible_p_t;    // (P, R(Q)) compatible
    bool sums_closed;       // always true in finite dimension
    double c_s_tperp;       // Friedrichs cosine c(S, T^perp)
    double c_t_sperp;       // Friedrichs cosine c(T, S^perp)
    bool angle_symmetric;   // the two cosines agree within tol.norm
    bool angle_strict;      // both < 1 - tol.rank
    bool defect_applicable; // ker Q ∩ S = {0}
    bool defect_below_one;  // ||(1-Q)P|| < 1, when applicable
};

EquivalenceBattery equivalence_battery(const Projection& q, const Projection& p,
                                       const ToleranceProfile& tol);

}  // namespace oblique
