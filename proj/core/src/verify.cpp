#include "oblique/verify.hpp"

#include <cmath>

#include "oblique/blocks.hpp"
#include "oblique/douglas.hpp"
#include "oblique/matrix_io.hpp"
#include "oblique/numcore.hpp"
#include "oblique/projector.hpp"
#include "oblique/random.hpp"
#include "oblique/shorted.hpp"
#include "oblique/twoproj.hpp"

namespace oblique::verify {

void FamilyResult::check(bool ok, const std::string& note_on_failure) {
    ++checks;
    if (!ok) {
        ++failures;
        if (notes.size() < 8) notes.push_back(note_on_failure);
    }
}

void FamilyResult::residual(double r, double bound, const std::string& note_on_failure) {
    ++checks;
    if (r > max_residual) max_residual = r;
    if (!(r <= bound)) {
        ++failures;
        if (notes.size() < 8) {
            notes.push_back(note_on_failure + " (residual " + format_double(r) + ")");
        }
    }
}

namespace {

enum FamilyId : std::uint64_t {
    fam_numcore = 1,
    fam_subspace,
    fam_douglas,
    fam_projector,
    fam_shorted,
    fam_twoproj,
};

Index draw_index(std::mt19937_64& rng, Index lo, Index hi) {
    return lo + static_cast<Index>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double rel(const Matrix& x, const Matrix& ref) {
    return operator_norm(x) / eq_scale(operator_norm(ref));
}

/// Matrix with the given nonzero singular values in random orientations.
Matrix matrix_with_ranks(std::mt19937_64& rng, Index rows, Index cols, Index rank,
                         bool cf, double lo = 0.3, double hi = 3.0) {
    Matrix m = Matrix::Zero(rows, cols);
    const Matrix u = random_unitary(rng, rows, cf);
    const Matrix v = random_unitary(rng, cols, cf);
    for (Index i = 0; i < rank; ++i) {
        const double s = std::exp(uniform_real(rng, std::log(lo), std::log(hi)));
        m += s * u.col(i) * v.col(i).adjoint();
    }
    return m;
}

}  // namespace

FamilyResult run_numcore(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "numcore";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_numcore, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index rows = draw_index(rng, 1, dim);
        const Index cols = draw_index(rng, 1, dim);
        const Matrix m = random_matrix(rng, rows, cols, cf);

        const SvdResult dec = svd(m);
        Matrix sv = Matrix::Zero(rows, cols);
        for (Index i = 0; i < dec.sigma.size(); ++i) {
            sv += dec.sigma(i) * dec.u.col(i) * dec.v.col(i).adjoint();
        }
        out.residual(rel(sv - m, m), 1e-12, "svd reconstruction");
        out.residual(operator_norm(dec.u.adjoint() * dec.u - Matrix::Identity(rows, rows)),
                     1e-12, "svd U unitarity");
        out.residual(operator_norm(dec.v.adjoint() * dec.v - Matrix::Identity(cols, cols)),
                     1e-12, "svd V unitarity");
        bool sorted = true;
        for (Index i = 0; i + 1 < dec.sigma.size(); ++i) {
            sorted = sorted && dec.sigma(i) >= dec.sigma(i + 1);
        }
        out.check(sorted, "svd singular values not sorted");

        // Penrose identities for the pseudoinverse.
        const Matrix mp = pinv(m, tol);
        out.residual(rel(m * mp * m - m, m), tol.eq, "pinv M M+ M = M");
        out.residual(rel(mp * m * mp - mp, mp), tol.eq, "pinv M+ M M+ = M+");
        const Matrix mmp = m * mp;
        const Matrix mpm = mp * m;
        out.residual(rel(mmp - mmp.adjoint().eval(), mmp), tol.eq, "pinv (M M+)* = M M+");
        out.residual(rel(mpm - mpm.adjoint().eval(), mpm), tol.eq, "pinv (M+ M)* = M+ M");

        // PSD square root reproduces its input.
        const Index n = draw_index(rng, 1, dim);
        const Index rank = draw_index(rng, 0, n);
        const HermitianMatrix a = random_psd(rng, n, rank, cf, tol);
        const HermitianMatrix s = psd_sqrt(a, tol);
        out.residual(rel(s.matrix() * s.matrix() - a.matrix(), a.matrix()), 1e-10,
                     "psd_sqrt S S = A");

        // Monotonicity on commuting (diagonal) inputs.
        {
            RealVector hi_v(n), lo_v(n);
            bool mono = true;
            for (Index i = 0; i < n; ++i) {
                lo_v(i) = uniform_real(rng, 0.0, 4.0);
                hi_v(i) = lo_v(i) + uniform_real(rng, 0.0, 4.0);
                mono = mono && std::sqrt(hi_v(i)) >= std::sqrt(lo_v(i));
            }
            out.check(mono, "psd_sqrt diagonal monotonicity");
        }

        // Norm agrees with sigma[0] and is an upper bound achieved by
        // sampling when the domain is small enough for sampling to bite.
        out.check(operator_norm(m) == dec.sigma(0), "operator_norm != sigma[0]");
        const Index real_dim = cols * (cf ? 2 : 1);
        if (real_dim <= 5) {
            double best = 0.0;
            for (int t = 0; t < 1000; ++t) {
                Matrix v = random_matrix(rng, cols, 1, cf);
                const double vn = v.norm();
                if (vn == 0.0) continue;
                best = std::max(best, (m * (v / vn)).norm());
            }
            out.check(best <= dec.sigma(0) * (1.0 + 1e-12), "sampled vector beats the norm");
            out.check(best >= 0.95 * dec.sigma(0), "sampling lower bound below 95%");
        }
    }
    return out;
}

FamilyResult run_subspace(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "subspace";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_subspace, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index n = draw_index(rng, 2, std::max<Index>(2, dim));
        const Index ks = draw_index(rng, 0, n);
        const Index kt = draw_index(rng, 0, n);
        const Subspace s = random_subspace(rng, n, ks, cf, tol);
        const Subspace t = random_subspace(rng, n, kt, cf, tol);

        out.check(subspace_equal(complement(complement(s)), s), "complement involution");
        out.residual(operator_norm(s.projector() + complement(s).projector() -
                                   Matrix::Identity(n, n)),
                     1e-10, "P_S + P_Sperp = I");

        const Subspace u = sum(s, t);
        const Subspace w = intersect(s, t);
        out.check(u.dim() + w.dim() == s.dim() + t.dim(), "dimension formula");
        out.check(subspace_equal(sum(s, s), s) && subspace_equal(intersect(s, s), s),
                  "sum/intersect idempotence");

        const double cst = friedrichs_cos(s, t);
        out.check(std::abs(cst - friedrichs_cos(t, s)) <= tol.norm, "angle symmetry");
        out.check(std::abs(cst - friedrichs_cos(complement(t), complement(s))) <= tol.norm,
                  "angle complement symmetry");
        {
            const Subspace s_red = ominus(s, w);
            const Subspace t_red = ominus(t, w);
            if (s_red.dim() > 0 && t_red.dim() > 0) {
                out.check(cst <= 1.0 - tol.rank, "angle cosine not strictly below 1");
            }
        }

        // Spanning-set recovery: the projector reproduces the columns.
        if (ks > 0) {
            const Matrix g = random_matrix(rng, ks, draw_index(rng, 1, dim), cf);
            const Matrix span_m = s.basis() * g;
            const Subspace rec = Subspace::from_spanning(span_m, tol);
            out.residual(rel(rec.projector() * span_m - span_m, span_m), 1e-10,
                         "from_spanning projector recovery");
        }

        // Preimages always pick up the kernel.
        const Index ra = draw_index(rng, 0, n);
        const Matrix a = matrix_with_ranks(rng, n, n, ra, cf);
        out.check(subspace_contains(preimage(a, complement(s), tol), kernel(a, tol)),
                  "preimage contains kernel");
    }
    return out;
}

FamilyResult run_douglas(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "douglas";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_douglas, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index n = draw_index(rng, 2, std::max<Index>(2, dim));
        const Index r = draw_index(rng, 1, n);
        const Index p = draw_index(rng, 1, n);
        const Matrix a = matrix_with_ranks(rng, n, n, r, cf);
        const Matrix b = a * random_matrix(rng, n, p, cf);

        out.check(range_included(b, a, tol), "constructed inclusion not detected");
        try {
            const ReducedSolutionResult rs = reduced_solution(a, b, tol);
            out.residual(rel(a * rs.d - b, b), 1e-9, "A D = B");
            out.residual(std::abs(rs.norm_sq - rs.lambda_star) / eq_scale(rs.lambda_star),
                         1e-6, "||D||^2 vs lambda*");
            out.check(subspace_equal(kernel(rs.d, tol), kernel(b, tol)), "ker D = ker B");
            out.check(subspace_contains(Subspace::from_spanning(a.adjoint(), tol),
                                        Subspace::from_spanning(rs.d, tol)),
                      "R(D) in R(A*)");

            // Uniqueness: pushing D along ker A breaks the range condition.
            if (r < n) {
                const Matrix v = complement(Subspace::from_spanning(a, tol)).basis().col(0);
                const Matrix w = kernel(a, tol).basis().col(0);
                const Matrix d_shift = rs.d + w * random_matrix(rng, 1, p, cf);
                out.check(!subspace_contains(Subspace::from_spanning(a.adjoint(), tol),
                                             Subspace::from_spanning(d_shift, tol)),
                          "perturbed D still inside R(A*)");

                // Leak outside R(A): inclusion must fail and no bounded
                // lambda restores the PSD domination.
                const Matrix b_bad = b + v * random_matrix(rng, 1, p, cf);
                out.check(!range_included(b_bad, a, tol), "leaked range not detected");
                bool threw = false;
                try {
                    reduced_solution(a, b_bad, tol);
                } catch (const RangeNotIncluded&) {
                    threw = true;
                }
                out.check(threw, "reduced_solution accepted a leaked range");
                const Matrix aa = a * a.adjoint();
                const Matrix bb = b_bad * b_bad.adjoint();
                out.check(min_hermitian_eigenvalue(1e6 * aa - bb) <
                              -tol.rank * operator_norm(aa),
                          "leaked range dominated at lambda = 1e6");
            }
        } catch (const Error& e) {
            out.check(false, std::string("reduced_solution raised: ") + e.what());
        }

        // Idempotency of the reduced solution of A X = Q A.
        try {
            const Index kq = draw_index(rng, 1, r);
            const Matrix inside = Subspace::from_spanning(a, tol).basis() *
                                  random_matrix(rng, r, kq, cf);
            const Subspace t = Subspace::from_spanning(inside, tol);
            const Projection q = random_idempotent_with_range(rng, t, cf, tol);
            const Projection d = reduced_idempotent(a, q, tol);
            out.residual(rel(d.matrix() * d.matrix() - d.matrix(), d.matrix()), tol.eq,
                         "reduced idempotent squares to itself");
        } catch (const Error& e) {
            out.check(false, std::string("reduced_idempotent raised: ") + e.what());
        }
    }
    return out;
}

FamilyResult run_projector(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "projector";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_projector, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index n = draw_index(rng, 2, std::max<Index>(2, dim));
        const Index r = draw_index(rng, 1, n);
        const Index k = draw_index(rng, 1, n - 1);
        const HermitianMatrix a = random_psd(rng, n, r, cf, tol);
        const Subspace s = random_subspace(rng, n, k, cf, tol);

        try {
            const Projection q = p_as(a, s, tol);
            out.residual(rel(q.matrix() * q.matrix() - q.matrix(), q.matrix()), 1e-9,
                         "p_as idempotency");
            out.residual(rel(a.matrix() * q.matrix() - q.matrix().adjoint() * a.matrix(),
                             a.matrix()),
                         1e-9, "p_as A-selfadjointness");
            out.residual(rel(q.matrix() * s.basis() - s.basis(), s.basis()), 1e-9,
                         "p_as fixes S");
            out.check(subspace_contains(preimage(a.matrix(), complement(s), tol), q.kernel()),
                      "p_as kernel outside A^{-1}(S^perp)");

            const ASelfadjointChecks good = a_selfadjoint_checks(a, q, tol);
            out.check(good.equation && good.kernel_inclusion &&
                          good.psd_order.value_or(false),
                      "three-way selfadjointness on p_as");

            const Projection oblique_q = random_idempotent_with_range(rng, s, cf, tol);
            const ASelfadjointChecks any = a_selfadjoint_checks(a, oblique_q, tol);
            out.check(any.equation == any.kernel_inclusion &&
                          any.equation == any.psd_order.value_or(any.equation),
                      "three-way agreement on a random idempotent");

            const CompatibilityReport rep = compatibility(a, s, tol);
            out.check(rep.compatible && rep.cond_block && rep.cond_range_pa && rep.cond_sum,
                      "PSD pair reported incompatible");
            out.check(rep.unique == (rep.n_dim == 0), "uniqueness flag vs dim N");

            // Manifold membership and minimal norm.
            const ManifoldParam par = manifold(a, s, tol);
            out.check(rep.n_dim == par.n_space.dim(), "dim N disagrees with the report");
            const double base_norm = par.base.norm();
            for (int zc = 0; zc < 5; ++zc) {
                Matrix z = random_matrix(rng, par.n_space.dim(), par.s_perp.dim(), cf);
                const double zn = operator_norm(z);
                if (zn > 2.0) z *= 2.0 / zn;
                const Projection member = manifold_member(par, z, tol);
                out.check(is_a_selfadjoint(a, member, tol), "member not A-selfadjoint");
                out.check(member.norm() >= base_norm - 1e-10, "member beats the base norm");
            }

            // Block-norm identity for (1 x; 0 0).
            const SplitBasis split(s);
            const Matrix x = random_matrix(rng, k, n - k, cf);
            const Matrix qx = split.from_block(
                split.assemble(Matrix::Identity(k, k), x, Matrix::Zero(n - k, k),
                               Matrix::Zero(n - k, n - k)));
            const double qn = operator_norm(qx);
            const double xn = operator_norm(x);
            out.residual(std::abs(qn * qn - (1.0 + xn * xn)) / eq_scale(1.0 + xn * xn),
                         1e-9, "block norm identity");

            // Definite case: closed formula agrees with the block route.
            const HermitianMatrix apd = random_psd(rng, n, n, cf, tol);
            const Projection via_block = p_as(apd, s, tol);
            const Projection via_inverse = p_as_invertible(apd, s, tol);
            out.residual(rel(via_block.matrix() - via_inverse.matrix(), via_block.matrix()),
                         1e-8, "invertible closed formula");

            // Parallel manifolds: B = A^2 keeps the range; B = 2A keeps d.
            const HermitianMatrix a_sq =
                HermitianMatrix::psd(a.matrix() * a.matrix(), tol);
            const Matrix delta = parallel_offset(a, a_sq, s, tol, 5, rng());
            out.check(delta.rows() == n, "offset has wrong shape");
            const HermitianMatrix a_two = HermitianMatrix::psd(2.0 * a.matrix(), tol);
            out.residual(operator_norm(parallel_offset(a, a_two, s, tol, 3, rng())), 1e-10,
                         "offset for B = 2A not zero");
        } catch (const Error& e) {
            out.check(false, std::string("projector case raised: ") + e.what());
        }

        // Indefinite battery: the three conditions agree as booleans.
        try {
            const HermitianMatrix h = random_indefinite(rng, n, cf, tol);
            const CompatibilityReport rep = compatibility(h, s, tol);
            out.check(rep.cond_block == rep.cond_range_pa && rep.cond_block == rep.cond_sum,
                      "independent conditions disagree (random hermitian)");
            if (rep.compatible) {
                const Projection q = p_as(h, s, tol);
                out.check(is_a_selfadjoint(h, q, tol), "indefinite p_as not A-selfadjoint");
                const ManifoldParam par = manifold(h, s, tol);
                const Matrix z = random_matrix(rng, par.n_space.dim(), par.s_perp.dim(), cf);
                const Projection member = manifold_member(par, z, tol);
                out.check(is_a_selfadjoint(h, member, tol),
                          "indefinite member not A-selfadjoint");
            } else {
                bool threw = false;
                try {
                    p_as(h, s, tol);
                } catch (const NotCompatible&) {
                    threw = true;
                }
                out.check(threw, "incompatible pair did not raise");
            }
        } catch (const Error& e) {
            out.check(false, std::string("indefinite case raised: ") + e.what());
        }

        // Engineered incompatible pair: a-block singular, b leaking out.
        if (k < n) {
            try {
                const Subspace es = random_subspace(rng, n, k, cf, tol);
                const SplitBasis split(es);
                Matrix blk_a = Matrix::Zero(k, k);
                for (Index i = 0; i + 1 < k; ++i) blk_a(i, i) = 1.0;
                Matrix blk_b = Matrix::Zero(k, n - k);
                blk_b.row(k - 1) = random_matrix(rng, 1, n - k, cf);
                blk_b(k - 1, 0) += 1.0;
                Matrix blk_c = random_matrix(rng, n - k, n - k, cf);
                blk_c = 0.5 * (blk_c + blk_c.adjoint().eval());
                const Matrix amat = split.from_block(
                    split.assemble(blk_a, blk_b, blk_b.adjoint(), blk_c));
                const HermitianMatrix h(0.5 * (amat + amat.adjoint().eval()), tol);
                const CompatibilityReport rep = compatibility(h, es, tol);
                out.check(!rep.compatible && !rep.cond_range_pa && !rep.cond_sum,
                          "engineered incompatible pair slipped through");
            } catch (const Error& e) {
                out.check(false, std::string("engineered case raised: ") + e.what());
            }
        }
    }
    return out;
}

FamilyResult run_shorted(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "shorted";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_shorted, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index n = draw_index(rng, 2, std::max<Index>(2, dim));
        const Index r = draw_index(rng, 1, n);
        const Index k = draw_index(rng, 1, n - 1);
        const HermitianMatrix a = random_psd(rng, n, r, cf, tol);
        const Subspace s = random_subspace(rng, n, k, cf, tol);
        const double scale = eq_scale(operator_norm(a.matrix()));

        try {
            const ShortedResult s1 = shorted(a, s, tol);
            const ShortedResult s2 = shorted_via_projection(a, s, tol);
            const ShortedResult s3 = shorted_compatible(a, s, tol);
            out.residual(operator_norm(s1.sigma.matrix() - s2.sigma.matrix()) / scale, 1e-8,
                         "block vs projection route");
            out.residual(operator_norm(s1.sigma.matrix() - s3.sigma.matrix()) / scale, 1e-8,
                         "block vs compatible route");
            out.residual(operator_norm(s2.sigma.matrix() - s3.sigma.matrix()) / scale, 1e-8,
                         "projection vs compatible route");

            // Range identity and the weaker chain.
            const Subspace sig_range = Subspace::from_spanning(s1.sigma.matrix(), tol);
            const Subspace meet =
                intersect(Subspace::from_spanning(a.matrix(), tol), complement(s));
            out.check(subspace_equal(sig_range, meet), "range identity");
            out.check(subspace_contains(sig_range, meet), "weak chain inclusion");

            // Shift identity.
            const Matrix one_minus_p =
                Matrix::Identity(n, n) - s.projector();
            for (double lambda : {0.5, 1.0, 2.0}) {
                const HermitianMatrix shifted = HermitianMatrix::psd(
                    a.matrix() + lambda * one_minus_p, tol);
                const Matrix lhs = shorted(shifted, s, tol).sigma.matrix();
                const Matrix rhs = s1.sigma.matrix() + lambda * one_minus_p;
                out.residual(operator_norm(lhs - rhs) / eq_scale(operator_norm(rhs)), 1e-8,
                             "shift identity");
            }

            // Extremality by sampling idempotents with kernel S.
            const InfimumResult inf = infimum_attained(a, s, tol, 10, rng());
            out.check(inf.attained, "sampled idempotent undercut the shorted operator");

            // Minorants never contradict maximality.
            const MinorantVerdict mv0 = minorant_verdict(
                a, s, HermitianMatrix::psd(Matrix::Zero(n, n), tol), tol);
            out.check(mv0.leq_a && mv0.range_in_s_perp && mv0.leq_sigma, "zero minorant");
            out.check(minorant_check(a, s, s1.sigma, tol), "sigma is its own minorant");
            {
                const Subspace sp = complement(s);
                if (sp.dim() > 0) {
                    const Matrix bump =
                        sp.basis().col(0) * sp.basis().col(0).adjoint();
                    const HermitianMatrix x = HermitianMatrix::psd(
                        s1.sigma.matrix() + 1e-3 * bump, tol);
                    const MinorantVerdict mv = minorant_verdict(a, s, x, tol);
                    out.check(!(mv.leq_a && mv.range_in_s_perp && !mv.leq_sigma),
                              "found a minorant above sigma");
                }
            }

            // Monotone shorting on a nested pair.
            if (k < n - 1) {
                const Index extra = draw_index(rng, 1, n - 1 - k);
                const Subspace big = sum(
                    s, random_subspace(rng, n, extra, cf, tol));
                const ShortedResult sb = shorted(a, big, tol);
                out.check(psd_leq(sb.sigma.matrix(), s1.sigma.matrix(), tol),
                          "shorting is not antitone in S");
            }

            // Invertible closed form c - b* a^{-1} b.
            const HermitianMatrix apd = random_psd(rng, n, n, cf, tol);
            const SplitBasis split(s);
            const Matrix ablk = split.to_block(apd.matrix());
            const Matrix blk_a = split.block_a(ablk);
            const Matrix blk_b = split.block_b(ablk);
            const Matrix blk_c = split.block_c(ablk);
            const Matrix tail = blk_c - blk_b.adjoint() * blk_a.inverse() * blk_b;
            const Matrix closed = split.from_block(
                split.assemble(Matrix::Zero(k, k), Matrix::Zero(k, n - k),
                               Matrix::Zero(n - k, k), tail));
            out.residual(operator_norm(shorted(apd, s, tol).sigma.matrix() - closed) /
                             eq_scale(operator_norm(apd.matrix())),
                         1e-8, "invertible closed form");
            out.check(is_admissible(apd, s, tol), "definite operator not admissible");
        } catch (const Error& e) {
            out.check(false, std::string("shorted case raised: ") + e.what());
        }
    }
    return out;
}

FamilyResult run_twoproj(std::uint64_t seed, int cases, Index dim, const ToleranceProfile& tol) {
    FamilyResult out;
    out.name = "twoproj";
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        std::mt19937_64 rng(mix_seed(seed, fam_twoproj, static_cast<std::uint64_t>(c)));
        const bool cf = rng() & 1;
        const Index n = draw_index(rng, 2, std::max<Index>(2, dim));
        const Index rt = draw_index(rng, 1, n - 1);
        const Index k = draw_index(rng, 1, rt);
        const Projection q = orth_projector(random_subspace(rng, n, rt, cf, tol));
        const Projection p = orth_projector(random_subspace(rng, n, k, cf, tol));

        try {
            if (intersect(q.kernel(), p.range()).dim() == 0) {
                const TwoProjReport rep = norm_report(q, p, tol);
                const double nn = eq_scale(rep.norm);
                out.residual(std::abs(rep.norm - rep.norm_via_inverse) / nn, 1e-8,
                             "norm vs inverse route");
                out.residual(std::abs(rep.norm - rep.norm_via_defect) / nn, 1e-8,
                             "norm vs defect route");
                out.residual(std::abs(rep.norm - q_restricted_inverse_norm(q, p, tol)) / nn,
                             1e-8, "norm vs restricted inverse");
                out.check(rep.kernel_ok, "kernel characterization failed");
            }

            // Engineered nontrivial N = ker Q ∩ R(P).
            if (q.kernel().dim() > 0 && k >= 1) {
                const Index j = draw_index(rng, 1, q.kernel().dim());
                Matrix span_m(n, j + k);
                span_m << q.kernel().basis().leftCols(j), random_matrix(rng, n, k, cf);
                const Subspace s_mixed = Subspace::from_spanning(span_m, tol);
                const Projection p_mixed = orth_projector(s_mixed);
                const Projection full = p_qp(q, p_mixed, tol);
                const TwoProjDecomposition dec = decompose(q, p_mixed, tol);
                out.residual(rel(full.matrix() -
                                     (dec.p_n.matrix() + dec.p_qp0.matrix()),
                                 full.matrix()),
                             1e-9, "decomposition sum identity");
                out.check(kernel_characterization(q, p_mixed, tol),
                          "kernel characterization (engineered N)");
            }

            // Generic position certificate.
            const bool gen = generic_position(q, p, tol);
            if (gen) {
                const Projection proj = p_qp(q, p, tol);
                out.check(subspace_equal(proj.range(), p.range()) &&
                              subspace_equal(proj.kernel(), q.kernel()),
                          "generic position shape");
            }

            const EquivalenceBattery bat = equivalence_battery(q, p, tol);
            out.check(bat.compatible_q_s && bat.compatible_p_t && bat.sums_closed,
                      "finite-dimensional battery flags");
            out.check(bat.angle_symmetric, "angle symmetry in battery");
            out.check(bat.angle_strict, "angle strictness in battery");
            if (bat.defect_applicable) {
                out.check(bat.defect_below_one, "defect reached 1");
            }

            // 2D family: ||P_{Q,P}|| cos(theta) = 1.
            {
                const double theta = uniform_real(rng, 0.05, 1.52);
                Matrix bp(2, 1), bq(2, 1);
                bp << 1.0, 0.0;
                bq << std::cos(theta), std::sin(theta);
                const Projection p2 = orth_projector(Subspace::from_orthonormal(bp, tol));
                const Projection q2 = orth_projector(Subspace::from_orthonormal(bq, tol));
                const double norm2 = p_qp(q2, p2, tol).norm();
                out.residual(std::abs(norm2 * std::cos(theta) - 1.0), 1e-9,
                             "2D sweep norm identity");
            }
        } catch (const Error& e) {
            out.check(false, std::string("twoproj case raised: ") + e.what());
        }
    }
    return out;
}

std::vector<FamilyResult> run_suite(std::uint64_t seed, int cases, Index dim,
                                    const ToleranceProfile& tol) {
    return {run_numcore(seed, cases, dim, tol), run_subspace(seed, cases, dim, tol),
            run_douglas(seed, cases, dim, tol), run_projector(seed, cases, dim, tol),
            run_shorted(seed, cases, dim, tol), run_twoproj(seed, cases, dim, tol)};
}

}  // namespace oblique::verify
