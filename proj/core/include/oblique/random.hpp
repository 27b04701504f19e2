#pragma once

#include <cstdint>
#include <random>

#include "oblique/projection.hpp"

namespace oblique {

/// Derive an independent stream seed from (seed, family, case index).
/// splitmix64-style mixing keeps per-case streams independent of
/// evaluation order, which makes parallel aggregation deterministic.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t family, std::uint64_t index);

/// Standard normal deviate from explicit uniform bits (Box-Muller).
/// std::normal_distribution is implementation-defined; reports must be
/// byte-reproducible for a fixed seed, so the library rolls its own.
double standard_normal(std::mt19937_64& rng);

/// Uniform in [lo, hi) from explicit bits.
double uniform_real(std::mt19937_64& rng, double lo, double hi);

/// Entries iid standard normal; complex entries get independent real and
/// imaginary parts scaled by 1/sqrt(2).
Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, bool complex_field);

/// Haar-like random unitary (QR of a Gaussian matrix with phase fix).
Matrix random_unitary(std::mt19937_64& rng, Index n, bool complex_field);

/// Random k-dimensional subspace of C^n.
Subspace random_subspace(std::mt19937_64& rng, Index n, Index k, bool complex_field,
                         const ToleranceProfile& tol);

/// Hermitian with the given eigenvalues (random eigenbasis).
Matrix hermitian_from_spectrum(std::mt19937_64& rng, const RealVector& eigenvalues,
                               bool complex_field);

/// PSD of the given rank with positive eigenvalues log-uniform in
/// [lambda_lo, lambda_hi]; remaining eigenvalues are exact zeros. The
/// default spread keeps squares of these operators well conditioned.
HermitianMatrix random_psd(std::mt19937_64& rng, Index n, Index rank, bool complex_field,
                           const ToleranceProfile& tol, double lambda_lo = 0.3,
                           double lambda_hi = 3.0);

/// Indefinite Hermitian with eigenvalue magnitudes log-uniform in
/// [0.1, 10] and random signs (at least one of each when n >= 2).
HermitianMatrix random_indefinite(std::mt19937_64& rng, Index n, bool complex_field,
                                  const ToleranceProfile& tol);

/// Random idempotent with kernel exactly S: in the block coordinates of S
/// these are precisely (0 g; 0 1), i.e. (1-P) + P G (1-P) with G bounded.
Projection random_idempotent_with_kernel(std::mt19937_64& rng, const Subspace& s,
                                         bool complex_field, const ToleranceProfile& tol,
                                         double g_norm_cap = 2.0);

/// Random idempotent with range exactly S ((1 x; 0 0) in block form).
Projection random_idempotent_with_range(std::mt19937_64& rng, const Subspace& s,
                                        bool complex_field, const ToleranceProfile& tol,
                                        double x_norm_cap = 2.0);

}  // namespace oblique
