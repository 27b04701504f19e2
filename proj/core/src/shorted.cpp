#include "oblique/shorted.hpp"

#include "oblique/errors.hpp"
#include "oblique/random.hpp"

namespace oblique {

namespace {

void require_psd(const HermitianMatrix& a, const ToleranceProfile& tol, const char* who) {
    if (!a.is_psd(tol)) {
        throw NotPositive(std::string(who) + ": operator must be positive semidefinite");
    }
}

void require_same_dim(const HermitianMatrix& a, const Subspace& s, const char* who) {
    if (a.dim() != s.ambient_dim()) {
        throw ShapeMismatch(std::string(who) + ": operator and subspace dimensions differ");
    }
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.adjoint().eval()); }

struct BlockShort {
    Matrix sigma;  // ambient coordinates
    Matrix d;      // reduced solution of a^{1/2} x = b, block coordinates
};

/// sigma = (0 0; 0 c - d*d) with d the reduced solution of a^{1/2} x = b.
BlockShort shorted_block_impl(const HermitianMatrix& a, const Subspace& s,
                              const ToleranceProfile& tol) {
    const SplitBasis split(s);
    const Index k = split.k();
    const Index m = split.ambient_dim() - k;
    const Matrix ablk = split.to_block(a.matrix());

    const HermitianMatrix a_half =
        psd_sqrt(HermitianMatrix(symmetrized(split.block_a(ablk)), tol), tol);
    const Matrix b = split.block_b(ablk);
    const Matrix d = reduced_solution_d(a_half.matrix(), b, tol);

    const Matrix tail = symmetrized(split.block_c(ablk) - d.adjoint() * d);
    const Matrix blk = split.assemble(Matrix::Zero(k, k), Matrix::Zero(k, m),
                                      Matrix::Zero(m, k), tail);
    return {symmetrized(split.from_block(blk)), d};
}

/// sigma = A^{1/2} P_M A^{1/2} with M = A^{-1/2}(S^perp).
Matrix shorted_projection_impl(const HermitianMatrix& a, const Subspace& s,
                               const ToleranceProfile& tol) {
    const HermitianMatrix a_half = psd_sqrt(a, tol);
    const Subspace m = preimage(a_half.matrix(), complement(s), tol);
    return symmetrized(a_half.matrix() * m.projector() * a_half.matrix());
}

ShortedResult finish(const HermitianMatrix& a, const Subspace& s, Matrix sigma, Matrix d,
                     ShortedRoute route, const ToleranceProfile& tol) {
    const double scale = eq_scale(operator_norm(a.matrix()));
    if (min_hermitian_eigenvalue(sigma) < -tol.rank * scale) {
        throw SelfCheckError("shorted: result is not positive semidefinite");
    }
    if (operator_norm(sigma) > 0.0 &&
        !subspace_contains(complement(s), Subspace::from_spanning(sigma, tol))) {
        throw SelfCheckError("shorted: result range leaks outside S^perp");
    }
    if (min_hermitian_eigenvalue(symmetrized(a.matrix() - sigma)) < -tol.rank * scale) {
        throw SelfCheckError("shorted: result is not dominated by the operator");
    }
    // The PSD validation is taken at the scale of A: sigma may be a
    // near-zero matrix whose own norm is pure roundoff.
    return ShortedResult{HermitianMatrix::psd(std::move(sigma), tol, scale), std::move(d),
                         route};
}

}  // namespace

ShortedResult shorted(const HermitianMatrix& a, const Subspace& s,
                      const ToleranceProfile& tol) {
    require_same_dim(a, s, "shorted");
    require_psd(a, tol, "shorted");
    BlockShort bs = shorted_block_impl(a, s, tol);
    return finish(a, s, std::move(bs.sigma), std::move(bs.d), ShortedRoute::block, tol);
}

ShortedResult shorted_via_projection(const HermitianMatrix& a, const Subspace& s,
                                     const ToleranceProfile& tol) {
    require_same_dim(a, s, "shorted_via_projection");
    require_psd(a, tol, "shorted_via_projection");
    Matrix sigma = shorted_projection_impl(a, s, tol);
    // The block route doubles as the built-in cross oracle.
    BlockShort bs = shorted_block_impl(a, s, tol);
    const double scale = eq_scale(operator_norm(a.matrix()));
    if (operator_norm(sigma - bs.sigma) > tol.eq * scale) {
        throw SelfCheckError("shorted_via_projection: disagrees with the block route");
    }
    return finish(a, s, std::move(sigma), std::move(bs.d), ShortedRoute::projection, tol);
}

ShortedResult shorted_compatible(const HermitianMatrix& a, const Subspace& s,
                                 const ToleranceProfile& tol) {
    require_same_dim(a, s, "shorted_compatible");
    require_psd(a, tol, "shorted_compatible");
    const Projection e = p_as(a, s, tol);
    const Index n = a.dim();
    const Matrix q = Matrix::Identity(n, n) - e.matrix();
    const Matrix aq = a.matrix() * q;
    const double scale = eq_scale(operator_norm(a.matrix()));
    if (operator_norm(aq - aq.adjoint().eval()) > tol.eq * scale) {
        throw SelfCheckError("shorted_compatible: A(1-E) is not selfadjoint");
    }
    Matrix sigma = symmetrized(aq);

    BlockShort bs = shorted_block_impl(a, s, tol);
    const Matrix proj_sigma = shorted_projection_impl(a, s, tol);
    if (operator_norm(sigma - bs.sigma) > tol.eq * scale ||
        operator_norm(sigma - proj_sigma) > tol.eq * scale) {
        throw SelfCheckError("shorted_compatible: routes disagree");
    }

    // Range identity: R(sigma) = R(A) ∩ S^perp.
    const Subspace sigma_range = Subspace::from_spanning(sigma, tol);
    const Subspace expected =
        intersect(Subspace::from_spanning(a.matrix(), tol), complement(s));
    if (!subspace_equal(sigma_range, expected)) {
        throw SelfCheckError("shorted_compatible: range identity R(A) ∩ S^perp failed");
    }
    return finish(a, s, std::move(sigma), std::move(bs.d), ShortedRoute::compatible, tol);
}

MinorantVerdict minorant_verdict(const HermitianMatrix& a, const Subspace& s,
                                 const HermitianMatrix& x, const ToleranceProfile& tol) {
    require_same_dim(a, s, "minorant_verdict");
    require_psd(a, tol, "minorant_verdict");
    require_psd(x, tol, "minorant_verdict");
    if (x.dim() != a.dim()) {
        throw ShapeMismatch("minorant_verdict: candidate has wrong size");
    }
    MinorantVerdict v{};
    v.leq_a = psd_leq(x.matrix(), a.matrix(), tol);
    v.range_in_s_perp =
        operator_norm(x.matrix()) == 0.0 ||
        subspace_contains(complement(s), Subspace::from_spanning(x.matrix(), tol));
    const ShortedResult sr = shorted(a, s, tol);
    v.leq_sigma = psd_leq(x.matrix(), sr.sigma.matrix(), tol);
    return v;
}

bool minorant_check(const HermitianMatrix& a, const Subspace& s, const HermitianMatrix& x,
                    const ToleranceProfile& tol) {
    const MinorantVerdict v = minorant_verdict(a, s, x, tol);
    return v.leq_a && v.range_in_s_perp && v.leq_sigma;
}

InfimumResult infimum_attained(const HermitianMatrix& a, const Subspace& s,
                               const ToleranceProfile& tol, int samples,
                               std::uint64_t seed) {
    require_same_dim(a, s, "infimum_attained");
    require_psd(a, tol, "infimum_attained");
    const Projection e = p_as(a, s, tol);
    const Index n = a.dim();
    // Q = 1 - E projects onto ker E along S, so ker Q = S.
    Projection q = Projection::from_parts(Matrix::Identity(n, n) - e.matrix(), e.kernel(),
                                          e.range(), tol);

    const Matrix sigma = shorted(a, s, tol).sigma.matrix();
    const double a_norm = operator_norm(a.matrix());
    bool ok = operator_norm(q.matrix().adjoint() * a.matrix() * q.matrix() - sigma) <=
              tol.eq * eq_scale(a_norm);

    const bool complex_field = a.matrix().imag().cwiseAbs().maxCoeff() > 0.0;
    std::mt19937_64 rng(mix_seed(seed, 0x1f1a, 0));
    for (int i = 0; ok && i < samples; ++i) {
        const Projection r = random_idempotent_with_kernel(rng, s, complex_field, tol);
        const Matrix rar = r.matrix().adjoint() * a.matrix() * r.matrix();
        const Matrix diff = 0.5 * ((rar - sigma) + (rar - sigma).adjoint().eval());
        if (min_hermitian_eigenvalue(diff) < -tol.rank * a_norm) ok = false;
    }
    return InfimumResult{std::move(q), ok};
}

bool is_admissible(const HermitianMatrix& a, const Subspace& s, const ToleranceProfile& tol) {
    require_same_dim(a, s, "is_admissible");
    require_psd(a, tol, "is_admissible");
    const ShortedResult sr = shorted(a, s, tol);
    return subspace_equal(kernel(sr.sigma.matrix(), tol), s);
}

}  // namespace oblique
