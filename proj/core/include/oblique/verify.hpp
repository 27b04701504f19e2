#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oblique/tolerance.hpp"
#include "oblique/matrix.hpp"

namespace oblique::verify {

/// Outcome of one seeded property family. `checks` counts individual
/// assertions, `failures` the ones that did not hold; max_residual is the
/// largest relative residual observed across passing and failing checks.
struct FamilyResult {
    std::string name;
    int cases = 0;
    long checks = 0;
    long failures = 0;
    double max_residual = 0.0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& note_on_failure);
    void residual(double r, double bound, const std::string& note_on_failure);
};

FamilyResult run_numcore(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);
FamilyResult run_subspace(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);
FamilyResult run_douglas(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);
FamilyResult run_projector(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);
FamilyResult run_shorted(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);
FamilyResult run_twoproj(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol);

/// Every family with the same budget. Per-case randomness is derived from
/// (seed, family, case), so results do not depend on evaluation order.
std::vector<FamilyResult> run_suite(std::uint64_t seed, int cases, Index dim,
                                    const ToleranceProfile& tol);

}  // namespace oblique::verify
