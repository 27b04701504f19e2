#include "oblique/projector.hpp"

#include "oblique/errors.hpp"
#include "oblique/random.hpp"

namespace oblique {

namespace {

void require_same_dim(const HermitianMatrix& a, Index n, const char* who) {
    if (a.dim() != n) {
        throw ShapeMismatch(std::string(who) + ": operator and subspace dimensions differ");
    }
}

/// Assemble (1 x; 0 0) in the block coordinates of S and return the
/// validated projection with range S.
Projection range_s_projection(const SplitBasis& split, const Subspace& s, const Matrix& x,
                              const ToleranceProfile& tol) {
    const Index k = split.k();
    const Index m = split.ambient_dim() - k;
    const Matrix blk = split.assemble(Matrix::Identity(k, k), x, Matrix::Zero(m, k),
                                      Matrix::Zero(m, m));
    Matrix q = split.from_block(blk);
    const Index n = q.rows();
    Subspace kern = Subspace::from_spanning(Matrix::Identity(n, n) - q, tol);
    return Projection::from_parts(std::move(q), s, std::move(kern), tol);
}

}  // namespace

ASelfadjointChecks a_selfadjoint_checks(const HermitianMatrix& a, const Projection& q,
                                        const ToleranceProfile& tol) {
    require_same_dim(a, q.dim(), "a_selfadjoint_checks");
    ASelfadjointChecks out{};
    const Matrix& am = a.matrix();
    const Matrix& qm = q.matrix();

    out.equation = operator_norm(am * qm - qm.adjoint() * am) <=
                   tol.eq * eq_scale(operator_norm(am));

    out.kernel_inclusion =
        subspace_contains(preimage(am, complement(q.range()), tol), q.kernel());

    if (a.is_psd(tol)) {
        const Matrix diff = am - qm.adjoint() * am * qm;
        out.psd_order = min_hermitian_eigenvalue(0.5 * (diff + diff.adjoint().eval())) >=
                        -tol.rank * eq_scale(operator_norm(am));
    }
    return out;
}

bool is_a_selfadjoint(const HermitianMatrix& a, const Projection& q,
                      const ToleranceProfile& tol) {
    require_same_dim(a, q.dim(), "is_a_selfadjoint");
    const Matrix& am = a.matrix();
    const Matrix& qm = q.matrix();
    return operator_norm(am * qm - qm.adjoint() * am) <= tol.eq * eq_scale(operator_norm(am));
}

CompatibilityReport compatibility(const HermitianMatrix& a, const Subspace& s,
                                  const ToleranceProfile& tol) {
    require_same_dim(a, s.ambient_dim(), "compatibility");
    const Index n = s.ambient_dim();
    const SplitBasis split(s);
    const Matrix ablk = split.to_block(a.matrix());

    CompatibilityReport rep{};
    rep.a = split.block_a(ablk);
    rep.b = split.block_b(ablk);

    // Condition routes, each computed independently:
    // (block)    R(b) ⊆ R(a) via the Douglas criterion,
    // (range)    R(PA) = R(PAP) as subspaces,
    // (sum)      S + A^{-1}(S^perp) spans everything.
    rep.cond_block = range_included(rep.b, rep.a, tol);

    const Matrix p = s.projector();
    const Matrix pa = p * a.matrix();
    rep.cond_range_pa = subspace_equal(Subspace::from_spanning(pa, tol),
                                       Subspace::from_spanning(pa * p, tol));

    const Subspace preim = preimage(a.matrix(), complement(s), tol);
    rep.cond_sum = sum(s, preim).dim() == n;

    const Subspace n_space = intersect(s, preim);
    rep.n_dim = n_space.dim();
    rep.unique = rep.cond_sum && rep.n_dim == 0;

    rep.compatible = rep.cond_block;
    if (rep.compatible && rep.a.rows() > 0) {
        rep.d = reduced_solution_d(rep.a, rep.b, tol);
    }
    return rep;
}

Projection p_as(const HermitianMatrix& a, const Subspace& s, const ToleranceProfile& tol) {
    require_same_dim(a, s.ambient_dim(), "p_as");
    const SplitBasis split(s);
    const Matrix ablk = split.to_block(a.matrix());
    const Matrix blk_a = split.block_a(ablk);
    const Matrix blk_b = split.block_b(ablk);

    // A PSD pair is always compatible here, so the inclusion test is only
    // a guard against tolerance pathologies; for indefinite A it is the
    // genuine compatibility decision.
    if (!range_included(blk_b, blk_a, tol)) {
        throw NotCompatible(a.is_psd(tol)
                                ? "p_as: block inclusion failed for a PSD operator "
                                  "(tolerance pathology)"
                                : "p_as: pair is not compatible (R(b) not in R(a))");
    }

    Matrix d(blk_a.rows(), blk_b.cols());
    try {
        d = reduced_solution_d(blk_a, blk_b, tol);
    } catch (const RangeNotIncluded& e) {
        throw NotCompatible(std::string("p_as: pair is not compatible (") + e.what() + ")");
    }

    Projection q = range_s_projection(split, s, d, tol);
    if (!is_a_selfadjoint(a, q, tol)) {
        throw SelfCheckError("p_as: constructed projection is not A-selfadjoint");
    }
    return q;
}

Projection p_as_invertible(const HermitianMatrix& a, const Subspace& s,
                           const ToleranceProfile& tol) {
    require_same_dim(a, s.ambient_dim(), "p_as_invertible");
    const Index n = a.dim();
    const double lo = min_hermitian_eigenvalue(a.matrix());
    if (lo < tol.rank * eq_scale(operator_norm(a.matrix()))) {
        throw NotInvertible("p_as_invertible: operator is not positive definite");
    }
    const Matrix p = s.projector();
    const Matrix e = Matrix::Identity(n, n) - p;
    const Matrix mixed = p * a.matrix() * p + e * a.matrix() * e;
    // mixed inherits positive definiteness from A, so a Cholesky solve is safe.
    Eigen::LLT<Matrix> llt(mixed);
    if (llt.info() != Eigen::Success) {
        throw NotInvertible("p_as_invertible: PAP + (1-P)A(1-P) failed Cholesky");
    }
    Matrix q = p * llt.solve(a.matrix());
    Subspace kern = Subspace::from_spanning(Matrix::Identity(n, n) - q, tol);
    return Projection::from_parts(std::move(q), s, std::move(kern), tol);
}

ManifoldParam manifold(const HermitianMatrix& a, const Subspace& s,
                       const ToleranceProfile& tol) {
    require_same_dim(a, s.ambient_dim(), "manifold");
    Projection base = p_as(a, s, tol);
    const bool psd = a.is_psd(tol);
    Subspace n_space = Subspace::zero(s.ambient_dim(), tol);
    if (psd) {
        n_space = intersect(kernel(a.matrix(), tol), s);
    } else if (s.dim() > 0) {
        // For an indefinite compatible operator the free directions are the
        // kernel of the a-block inside S, which can exceed ker A ∩ S.
        const SplitBasis split(s);
        const Matrix blk_a = split.block_a(split.to_block(a.matrix()));
        const Subspace ka = kernel(blk_a, tol);
        n_space = Subspace::from_spanning(s.basis() * ka.basis(), tol);
    }
    Subspace s_perp = complement(s);
    return ManifoldParam{std::move(base), std::move(n_space), std::move(s_perp), psd};
}

Projection manifold_member(const ManifoldParam& param, const Matrix& z,
                           const ToleranceProfile& tol) {
    if (z.rows() != param.n_space.dim() || z.cols() != param.s_perp.dim()) {
        throw ShapeMismatch("manifold_member: z must be dim(N) x dim(S^perp)");
    }
    Matrix q = param.base.matrix();
    if (z.rows() > 0 && z.cols() > 0) {
        q += param.n_space.basis() * z * param.s_perp.basis().adjoint();
    }
    const Index n = q.rows();
    Subspace kern = Subspace::from_spanning(Matrix::Identity(n, n) - q, tol);
    return Projection::from_parts(std::move(q), param.base.range(), std::move(kern), tol);
}

Matrix parallel_offset(const HermitianMatrix& a, const HermitianMatrix& b,
                       const Subspace& s, const ToleranceProfile& tol, int samples,
                       std::uint64_t seed) {
    require_same_dim(a, s.ambient_dim(), "parallel_offset");
    require_same_dim(b, s.ambient_dim(), "parallel_offset");
    if (!subspace_equal(Subspace::from_spanning(a.matrix(), tol),
                        Subspace::from_spanning(b.matrix(), tol))) {
        throw RangeMismatch("parallel_offset: operators do not share their range");
    }

    const ManifoldParam par_a = manifold(a, s, tol);
    const Projection base_b = p_as(b, s, tol);
    const Matrix delta = base_b.matrix() - par_a.base.matrix();

    const bool complex_field =
        a.matrix().imag().cwiseAbs().maxCoeff() > 0.0 ||
        b.matrix().imag().cwiseAbs().maxCoeff() > 0.0;
    std::mt19937_64 rng(mix_seed(seed, 0x0f5e7, 0));
    for (int i = 0; i < samples; ++i) {
        Matrix z = random_matrix(rng, par_a.n_space.dim(), par_a.s_perp.dim(), complex_field);
        const double zn = operator_norm(z);
        if (zn > 2.0) z *= 2.0 / zn;
        const Projection member = manifold_member(par_a, z, tol);
        // Translating a member of the A-manifold by delta must land in the
        // B-manifold: idempotent with range S (checked by the constructor)
        // and B-selfadjoint.
        const Matrix cand = member.matrix() + delta;
        Subspace kern =
            Subspace::from_spanning(Matrix::Identity(cand.rows(), cand.rows()) - cand, tol);
        const Projection translated = Projection::from_parts(cand, s, std::move(kern), tol);
        if (!is_a_selfadjoint(b, translated, tol)) {
            throw SelfCheckError("parallel_offset: translated member left the target manifold");
        }
    }
    return delta;
}

}  // namespace oblique
