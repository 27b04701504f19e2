#pragma once

#include "oblique/errors.hpp"

namespace oblique {

/// The three knobs of the global numerical policy.
///
/// rank : relative singular-value cutoff; every rank decision in the
///        library goes through this one threshold.
/// eq   : relative threshold for matrix equality tests.
/// norm : threshold for scalar comparisons.
///
/// All thresholds are relative to max(1, scale of the operand).
struct ToleranceProfile {
    double rank = 1e-10;
    double eq = 1e-8;
    double norm = 1e-8;

    ToleranceProfile() = default;

    ToleranceProfile(double rank_, double eq_, double norm_)
        : rank(rank_), eq(eq_), norm(norm_) {
        if (!(rank > 0.0) || !(eq > 0.0) || !(norm > 0.0)) {
            throw Error("ToleranceProfile: all tolerances must be strictly positive");
        }
    }

    /// rank <= eq is the recommended configuration; callers may warn otherwise.
    bool rank_exceeds_eq() const { return rank > eq; }
};

}  // namespace oblique
