#pragma once

#include "oblique/projection.hpp"

namespace oblique {

/// The reduced solution D of A X = B: the unique solution with
/// ker D = ker B and R(D) ⊆ R(A*). Exists iff R(B) ⊆ R(A), and then
/// ||D||^2 equals inf{ lambda : B B* <= lambda A A* }.
struct ReducedSolutionResult {
    Matrix d;
    double norm_sq;      // ||D||^2
    double lambda_star;  // inf{ lambda : B B* <= lambda A A* }, by bisection
};

/// Column space inclusion R(B) ⊆ R(A) under the rank policy, checked as
/// ||(I - P_{R(A)}) B|| <= tol.eq * max(1, ||B||).
bool range_included(const Matrix& b, const Matrix& a, const ToleranceProfile& tol);

/// Reduced solution of A X = B via the pseudoinverse, with lambda_star
/// recomputed independently by bisection on the PSD ordering. All result
/// invariants are validated before returning. Throws RangeNotIncluded when
/// the Douglas criterion fails; residuals in (tol.eq, 10 tol.eq] are
/// reported as borderline.
ReducedSolutionResult reduced_solution(const Matrix& a, const Matrix& b,
                                       const ToleranceProfile& tol);

/// The reduced solution alone, with the same inclusion precheck and
/// defining-property validation but without the lambda_star oracle. The
/// block solves inside other modules use this entry point: the bisection
/// cannot resolve 1e-6 agreement on arbitrarily compressed blocks, and
/// they only consume D.
Matrix reduced_solution_d(const Matrix& a, const Matrix& b, const ToleranceProfile& tol);

/// The reduced solution of A X = Q A for an idempotent Q is itself an
/// idempotent; returns it validated. Requires R(Q A) ⊆ R(A).
Projection reduced_idempotent(const Matrix& a, const Projection& q,
                              const ToleranceProfile& tol);

}  // namespace oblique
