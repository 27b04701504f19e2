#include "oblique/twoproj.hpp"

#include <cmath>

#include "oblique/errors.hpp"

namespace oblique {

namespace {

void require_orthogonal_pair(const Projection& q, const Projection& p, const char* who) {
    if (q.dim() != p.dim()) {
        throw ShapeMismatch(std::string(who) + ": projections live in different spaces");
    }
    if (!q.is_orthogonal() || !p.is_orthogonal()) {
        throw NotHermitianProjection(std::string(who) +
                                     ": both arguments must be orthogonal projections");
    }
}

HermitianMatrix as_form(const Projection& q, const ToleranceProfile& tol) {
    return HermitianMatrix::psd(q.matrix(), tol);
}

/// The two closed norm expressions for a pair with ker Q ∩ S = {0}:
/// ||(PQP)^{-1}||^{1/2} on S, and the defect form (1 - ||(1-Q)P||^2)^{-1/2}.
struct NormPair {
    double via_inverse;
    double via_defect;
};

NormPair closed_norms(const Projection& q, const Subspace& s, const ToleranceProfile& tol) {
    const Index n = q.dim();
    if (s.dim() == 0) return {0.0, 0.0};
    const Matrix pqp_s = s.basis().adjoint() * q.matrix() * s.basis();
    const double lo = min_hermitian_eigenvalue(0.5 * (pqp_s + pqp_s.adjoint().eval()));
    if (lo <= tol.rank) {
        throw NotInvertible("closed_norms: PQP is singular on S");
    }
    const double defect =
        operator_norm((Matrix::Identity(n, n) - q.matrix()) * s.projector());
    if (1.0 - defect * defect <= 0.0) {
        throw SelfCheckError("closed_norms: defect reached 1 on a trivial intersection");
    }
    return {std::sqrt(1.0 / lo), 1.0 / std::sqrt(1.0 - defect * defect)};
}

}  // namespace

Projection p_qp(const Projection& q, const Projection& p, const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "p_qp");
    return p_as(as_form(q, tol), p.range(), tol);
}

double q_restricted_inverse_norm(const Projection& q, const Projection& p,
                                 const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "q_restricted_inverse_norm");
    const Subspace& s = p.range();
    if (s.dim() == 0) return 0.0;
    if (intersect(q.kernel(), s).dim() > 0) {
        throw NotInvertible("q_restricted_inverse_norm: Q is singular on S");
    }
    const Subspace qs = Subspace::from_spanning(q.matrix() * s.basis(), tol);
    const Matrix restricted = qs.basis().adjoint() * q.matrix() * s.basis();
    const SvdResult dec = svd(restricted);
    return 1.0 / dec.sigma(dec.sigma.size() - 1);
}

bool kernel_characterization(const Projection& q, const Projection& p,
                             const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "kernel_characterization");
    const Projection proj = p_qp(q, p, tol);
    const Subspace rhs = ominus(preimage(q.matrix(), p.kernel(), tol),
                                intersect(q.kernel(), p.range()));
    return subspace_equal(proj.kernel(), rhs);
}

bool generic_position(const Projection& q, const Projection& p, const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "generic_position");
    const bool lhs_trivial = intersect(q.range(), p.kernel()).dim() == 0;
    const bool rhs_trivial = intersect(q.kernel(), p.range()).dim() == 0;
    if (!(lhs_trivial && rhs_trivial)) return false;
    const Projection proj = p_qp(q, p, tol);
    if (!subspace_equal(proj.range(), p.range()) ||
        !subspace_equal(proj.kernel(), q.kernel())) {
        throw SelfCheckError("generic_position: projection is not onto R(P) along ker Q");
    }
    return true;
}

TwoProjDecomposition decompose(const Projection& q, const Projection& p,
                               const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "decompose");
    const Subspace n_space = intersect(q.kernel(), p.range());
    const Subspace m_space = ominus(p.range(), n_space);
    Projection p_n = orth_projector(n_space);
    Projection part = p_qp(q, orth_projector(m_space), tol);

    const Projection full = p_qp(q, p, tol);
    const double scale = eq_scale(full.norm());
    if (operator_norm(full.matrix() - (p_n.matrix() + part.matrix())) > tol.eq * scale) {
        throw SelfCheckError("decompose: P_N + P_{Q,P0} does not reproduce P_{Q,P}");
    }
    if (m_space.dim() > 0) {
        const double full_norm = full.norm();
        const double part_norm = part.norm();
        const NormPair np = closed_norms(q, m_space, tol);
        if (std::abs(full_norm - part_norm) > tol.norm * eq_scale(full_norm) ||
            std::abs(full_norm - np.via_defect) > tol.norm * eq_scale(full_norm)) {
            throw SelfCheckError("decompose: norm did not transfer to the reduced part");
        }
    }
    return TwoProjDecomposition{std::move(p_n), std::move(part)};
}

TwoProjReport norm_report(const Projection& q, const Projection& p,
                          const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "norm_report");
    TwoProjReport rep{p_qp(q, p, tol), 0.0, 0.0, 0.0, false, false};
    rep.norm = rep.p_qp.norm();

    const Subspace n_space = intersect(q.kernel(), p.range());
    if (n_space.dim() == 0) {
        const NormPair np = closed_norms(q, p.range(), tol);
        rep.norm_via_inverse = np.via_inverse;
        rep.norm_via_defect = np.via_defect;
    } else {
        // Q is singular on R(P); the closed expressions are taken along the
        // reduced part, where they still equal the norm.
        const Subspace m_space = ominus(p.range(), n_space);
        if (m_space.dim() > 0) {
            const NormPair np = closed_norms(q, m_space, tol);
            rep.norm_via_inverse = np.via_inverse;
            rep.norm_via_defect = np.via_defect;
        } else {
            rep.norm_via_inverse = rep.norm;
            rep.norm_via_defect = rep.norm;
        }
    }
    rep.kernel_ok = kernel_characterization(q, p, tol);
    rep.generic = generic_position(q, p, tol);
    return rep;
}

EquivalenceBattery equivalence_battery(const Projection& q, const Projection& p,
                                       const ToleranceProfile& tol) {
    require_orthogonal_pair(q, p, "equivalence_battery");
    const Subspace& s = p.range();
    const Subspace& t = q.range();

    EquivalenceBattery bat{};
    bat.compatible_q_s = compatibility(as_form(q, tol), s, tol).compatible;
    bat.compatible_p_t = compatibility(as_form(p, tol), t, tol).compatible;
    bat.sums_closed = true;  // every subspace sum is closed in finite dimension

    bat.c_s_tperp = friedrichs_cos(s, complement(t));
    bat.c_t_sperp = friedrichs_cos(t, complement(s));
    bat.angle_symmetric = std::abs(bat.c_s_tperp - bat.c_t_sperp) <= tol.norm;
    bat.angle_strict =
        bat.c_s_tperp < 1.0 - tol.rank && bat.c_t_sperp < 1.0 - tol.rank;

    bat.defect_applicable = intersect(q.kernel(), s).dim() == 0;
    if (bat.defect_applicable) {
        const Index n = q.dim();
        bat.defect_below_one =
            operator_norm((Matrix::Identity(n, n) - q.matrix()) * p.matrix()) < 1.0;
    } else {
        bat.defect_below_one = false;
    }
    return bat;
}

}  // namespace oblique
