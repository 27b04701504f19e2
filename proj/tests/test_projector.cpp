#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <oblique/errors.hpp>
#include <oblique/projector.hpp>
#include <oblique/random.hpp>

#include "test_support.hpp"

using namespace oblique;
using namespace testsup;

namespace {

/// The rank-two 4x4 operator behind the sqrt(2) construction:
/// S = span{e1,e2}, d : S^perp -> S maps e3 to e1 and kills e4,
/// A = (P_{R(d)} d; d* 1) >= 0.
Matrix sqrt2_operator() {
    Matrix a = Matrix::Zero(4, 4);
    a(0, 0) = 1;
    a(0, 2) = 1;
    a(2, 0) = 1;
    a(2, 2) = 1;
    a(3, 3) = 1;
    return a;
}

}  // namespace

TEST_CASE("is_a_selfadjoint: identity form, oblique counterexample, constructed") {
    const HermitianMatrix eye(Matrix::Identity(2, 2), kTol);
    const Projection p = orth_projector(span_of(unit_col(2, 0)));
    CHECK(is_a_selfadjoint(eye, p, kTol));

    const Projection oblique_p = Projection::from_matrix(mat2(1, 1, 0, 0), kTol);
    CHECK_FALSE(is_a_selfadjoint(eye, oblique_p, kTol));

    std::mt19937_64 rng(97);
    for (int rep = 0; rep < 30; ++rep) {
        const bool cf = rep % 2 == 1;
        const Index n = 3 + static_cast<Index>(rng() % 6);
        const HermitianMatrix a =
            random_psd(rng, n, 1 + static_cast<Index>(rng() % n), cf, kTol);
        const Subspace s =
            random_subspace(rng, n, 1 + static_cast<Index>(rng() % (n - 1)), cf, kTol);
        const Projection q = p_as(a, s, kTol);
        const ASelfadjointChecks checks = a_selfadjoint_checks(a, q, kTol);
        CHECK(checks.equation);
        CHECK(checks.kernel_inclusion);
        CHECK(checks.psd_order.value_or(false));
    }
}

TEST_CASE("a_selfadjoint_checks: the three routes agree as booleans") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 50; ++rep) {
        const bool cf = rep % 2 == 1;
        const Index n = 2 + static_cast<Index>(rng() % 6);
        const HermitianMatrix a =
            random_psd(rng, n, 1 + static_cast<Index>(rng() % n), cf, kTol);
        const Subspace s =
            random_subspace(rng, n, 1 + static_cast<Index>(rng() % (n - 1)), cf, kTol);
        const Projection q = random_idempotent_with_range(rng, s, cf, kTol);
        const ASelfadjointChecks checks = a_selfadjoint_checks(a, q, kTol);
        CHECK(checks.equation == checks.kernel_inclusion);
        CHECK(checks.equation == checks.psd_order.value());
    }
}

TEST_CASE("compatibility: identity, the indefinite 2x2 witness, diag(1,0)") {
    const HermitianMatrix eye(Matrix::Identity(3, 3), kTol);
    std::mt19937_64 rng(103);
    const Subspace s3 = random_subspace(rng, 3, 2, false, kTol);
    const CompatibilityReport ok = compatibility(eye, s3, kTol);
    CHECK(ok.compatible);
    CHECK(ok.unique);
    CHECK(ok.n_dim == 0);

    // A = (0 1; 1 0), S = span{e1}: the a-block vanishes while b = 1, and
    // A^{-1}(S^perp) = S so the sum cannot fill the space.
    const HermitianMatrix witness(mat2(0, 1, 1, 0), kTol);
    const CompatibilityReport bad = compatibility(witness, span_of(unit_col(2, 0)), kTol);
    CHECK_FALSE(bad.compatible);
    CHECK_FALSE(bad.cond_block);
    CHECK_FALSE(bad.cond_range_pa);
    CHECK_FALSE(bad.cond_sum);
    CHECK_FALSE(bad.unique);
    CHECK_FALSE(bad.d.has_value());
    CHECK(operator_norm(bad.a) <= 1e-14);
    CHECK(operator_norm(bad.b) == doctest::Approx(1.0).epsilon(1e-12));

    // A = diag(1,0), S = span{(e1+e2)/sqrt(2)}: compatible with trivial N.
    const HermitianMatrix dg(diag({1.0, 0.0}), kTol);
    const CompatibilityReport mixed = compatibility(dg, span_of(col2(1, 1)), kTol);
    CHECK(mixed.compatible);
    CHECK(mixed.cond_range_pa);
    CHECK(mixed.cond_sum);
    CHECK(mixed.n_dim == 0);
    CHECK(mixed.unique);
}

TEST_CASE("compatibility: independent conditions agree on random hermitians") {
    std::mt19937_64 rng(107);
    int incompatible_seen = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const bool cf = rep % 2 == 1;
        const Index n = 2 + static_cast<Index>(rng() % 6);
        const HermitianMatrix h = random_indefinite(rng, n, cf, kTol);
        const Subspace s =
            random_subspace(rng, n, 1 + static_cast<Index>(rng() % (n - 1)), cf, kTol);
        const CompatibilityReport rep_h = compatibility(h, s, kTol);
        CHECK(rep_h.cond_block == rep_h.cond_range_pa);
        CHECK(rep_h.cond_block == rep_h.cond_sum);
        if (!rep_h.compatible) ++incompatible_seen;
    }
    (void)incompatible_seen;  // random indefinite pairs are usually compatible
}

TEST_CASE("p_as: identity gives the orthogonal projector") {
    std::mt19937_64 rng(109);
    const Subspace s = random_subspace(rng, 4, 2, true, kTol);
    const HermitianMatrix eye(Matrix::Identity(4, 4), kTol);
    const Projection q = p_as(eye, s, kTol);
    CHECK(rel(q.matrix() - s.projector(), s.projector()) <= 1e-10);
}

TEST_CASE("p_as: invertible 2x2 closed form (1 a^{-1}b; 0 0)") {
    // A = (a b; b* c) positive definite, S = span{e1}.
    std::mt19937_64 rng(113);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = uniform_real(rng, 0.5, 3.0);
        const Complex b(standard_normal(rng), rep % 2 == 1 ? standard_normal(rng) : 0.0);
        // c chosen so that det = a c - |b|^2 stays positive.
        const double c = (std::norm(b) + uniform_real(rng, 0.2, 2.0)) / a;
        Matrix m(2, 2);
        m << Complex(a, 0), b, std::conj(b), Complex(c, 0);
        const HermitianMatrix herm(m, kTol);
        const Projection q = p_as(herm, span_of(unit_col(2, 0)), kTol);
        Matrix expected = Matrix::Zero(2, 2);
        expected(0, 0) = 1.0;
        expected(0, 1) = b / a;
        CHECK(rel(q.matrix() - expected, expected) <= 1e-10);
    }
}

TEST_CASE("p_as: the sqrt(2) norm example") {
    const HermitianMatrix a = HermitianMatrix::psd(sqrt2_operator(), kTol);
    Matrix s_cols(4, 2);
    s_cols.setZero();
    s_cols(0, 0) = 1;
    s_cols(1, 1) = 1;
    const Subspace s = span_of(s_cols);

    const Projection base = p_as(a, s, kTol);
    CHECK(base.norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    // d is the reduced solution of P_{R(d)} x = d: it maps e3 to e1.
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1;
    expected(1, 1) = 1;
    expected(0, 2) = 1;
    CHECK(rel(base.matrix() - expected, expected) <= 1e-10);
}

TEST_CASE("p_as: incompatible pair raises") {
    const HermitianMatrix witness(mat2(0, 1, 1, 0), kTol);
    CHECK_THROWS_AS(p_as(witness, span_of(unit_col(2, 0)), kTol), NotCompatible);
}

TEST_CASE("p_as_invertible: identity, commuting diagonal, random definite") {
    std::mt19937_64 rng(127);
    const Subspace s = random_subspace(rng, 4, 2, false, kTol);
    const HermitianMatrix eye(Matrix::Identity(4, 4), kTol);
    CHECK(rel(p_as_invertible(eye, s, kTol).matrix() - s.projector(), s.projector()) <= 1e-10);

    const HermitianMatrix dg(diag({2.0, 1.0}), kTol);
    const Projection q = p_as_invertible(dg, span_of(unit_col(2, 0)), kTol);
    CHECK(rel(q.matrix() - diag({1.0, 0.0}), q.matrix()) <= 1e-12);

    for (int rep = 0; rep < 20; ++rep) {
        const bool cf = rep % 2 == 1;
        const HermitianMatrix a = random_psd(rng, 6, 6, cf, kTol);
        const Subspace s6 =
            random_subspace(rng, 6, 1 + static_cast<Index>(rng() % 5), cf, kTol);
        const Projection lhs = p_as(a, s6, kTol);
        const Projection rhs = p_as_invertible(a, s6, kTol);
        CHECK(rel(lhs.matrix() - rhs.matrix(), lhs.matrix()) <= 1e-8);
    }

    CHECK_THROWS_AS(p_as_invertible(HermitianMatrix(diag({1.0, 0.0}), kTol), s, kTol),
                    ShapeMismatch);
    CHECK_THROWS_AS(
        p_as_invertible(HermitianMatrix(diag({1.0, 0.0, 0.0, 2.0}), kTol), s, kTol),
        NotInvertible);
}

TEST_CASE("manifold: definite singleton, zero operator, diag(1,0,0) slot") {
    std::mt19937_64 rng(131);
    const HermitianMatrix apd = random_psd(rng, 4, 4, false, kTol);
    const Subspace s = random_subspace(rng, 4, 2, false, kTol);
    const ManifoldParam single = manifold(apd, s, kTol);
    CHECK(single.n_space.dim() == 0);
    CHECK(single.psd_case);

    const HermitianMatrix zero = HermitianMatrix::psd(Matrix::Zero(3, 3), kTol);
    const Subspace s3 = random_subspace(rng, 3, 2, false, kTol);
    const ManifoldParam degenerate = manifold(zero, s3, kTol);
    CHECK(subspace_equal(degenerate.n_space, s3));

    // A = diag(1,0,0), S = span{e1,e2}: one free slot L(span{e3}, span{e2}).
    // Oracle: (1 y; 0 0) is A-selfadjoint iff a y = b = 0, i.e. the first
    // coordinate of y vanishes, leaving exactly the e2-row free.
    Matrix s_cols(3, 2);
    s_cols.setZero();
    s_cols(0, 0) = 1;
    s_cols(1, 1) = 1;
    const HermitianMatrix a3(diag({1.0, 0.0, 0.0}), kTol);
    const ManifoldParam par = manifold(a3, span_of(s_cols), kTol);
    CHECK(par.n_space.dim() == 1);
    CHECK(subspace_equal(par.n_space, span_of(unit_col(3, 1))));
    CHECK(par.s_perp.dim() == 1);
    CHECK(subspace_equal(par.s_perp, span_of(unit_col(3, 2))));
}

TEST_CASE("manifold_member: zero parameter, sqrt(2) twin, norm domination") {
    const HermitianMatrix a = HermitianMatrix::psd(sqrt2_operator(), kTol);
    Matrix s_cols(4, 2);
    s_cols.setZero();
    s_cols(0, 0) = 1;
    s_cols(1, 1) = 1;
    const Subspace s = span_of(s_cols);
    const ManifoldParam par = manifold(a, s, kTol);
    CHECK(par.n_space.dim() == 1);  // N = S ominus R(d) = span{e2}
    CHECK(subspace_equal(par.n_space, span_of(unit_col(4, 1))));

    const Projection base = manifold_member(par, Matrix::Zero(1, 2), kTol);
    CHECK(rel(base.matrix() - par.base.matrix(), par.base.matrix()) <= 1e-13);

    // z supported on ker d = span{e4} with 0 < ||z|| <= 1 gives a member
    // distinct from the base whose norm is still exactly sqrt(2).
    for (double t : {0.25, 0.5, 1.0}) {
        const Matrix z_ambient = t * unit_col(4, 1) * unit_col(4, 3).adjoint();
        const Matrix z =
            par.n_space.basis().adjoint() * z_ambient * par.s_perp.basis();
        const Projection member = manifold_member(par, z, kTol);
        CHECK(member.norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
        CHECK(operator_norm(member.matrix() - par.base.matrix()) >= t * 0.99);
        CHECK(is_a_selfadjoint(a, member, kTol));
    }

    // Random parameters never drop below the base norm.
    std::mt19937_64 rng(137);
    for (int rep = 0; rep < 50; ++rep) {
        Matrix z = random_matrix(rng, 1, 2, rep % 2 == 1);
        const double zn = operator_norm(z);
        if (zn > 2.0) z *= 2.0 / zn;
        const Projection member = manifold_member(par, z, kTol);
        CHECK(member.norm() >= par.base.norm() - 1e-10);
        CHECK(is_a_selfadjoint(a, member, kTol));
    }
}

TEST_CASE("manifold: indefinite operator uses the a-block kernel") {
    // A = diag(0, 1, -1), S = span{e1}: the a-block vanishes, so every
    // idempotent (1 y; 0 0) with range S is A-selfadjoint.
    const HermitianMatrix a(diag({0.0, 1.0, -1.0}), kTol);
    const Subspace s = span_of(unit_col(3, 0));
    const ManifoldParam par = manifold(a, s, kTol);
    CHECK_FALSE(par.psd_case);
    CHECK(subspace_equal(par.n_space, s));

    std::mt19937_64 rng(139);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix z = random_matrix(rng, 1, 2, false);
        CHECK(is_a_selfadjoint(a, manifold_member(par, z, kTol), kTol));
    }
}

TEST_CASE("manifold_member: shape guard") {
    const HermitianMatrix eye(Matrix::Identity(3, 3), kTol);
    std::mt19937_64 rng(149);
    const ManifoldParam par = manifold(eye, random_subspace(rng, 3, 1, false, kTol), kTol);
    CHECK_THROWS_AS(manifold_member(par, Matrix::Zero(1, 2), kTol), ShapeMismatch);
}

TEST_CASE("parallel_offset: same operator, squared operator, doubled operator") {
    std::mt19937_64 rng(151);
    for (int rep = 0; rep < 10; ++rep) {
        const bool cf = rep % 2 == 1;
        const Index n = 4 + static_cast<Index>(rng() % 3);
        const HermitianMatrix a =
            random_psd(rng, n, 1 + static_cast<Index>(rng() % n), cf, kTol);
        const Subspace s =
            random_subspace(rng, n, 1 + static_cast<Index>(rng() % (n - 1)), cf, kTol);

        CHECK(operator_norm(parallel_offset(a, a, s, kTol, 5, rng())) <= 1e-12);

        const HermitianMatrix sq = HermitianMatrix::psd(a.matrix() * a.matrix(), kTol);
        const Matrix delta = parallel_offset(a, sq, s, kTol, 20, rng());
        CHECK(rel(delta - (p_as(sq, s, kTol).matrix() - p_as(a, s, kTol).matrix()), delta) <=
              1e-12);

        // d = a^+ b is scale invariant, so doubling A moves nothing.
        const HermitianMatrix twice = HermitianMatrix::psd(2.0 * a.matrix(), kTol);
        CHECK(operator_norm(parallel_offset(a, twice, s, kTol, 5, rng())) <= 1e-10);
    }

    const HermitianMatrix a = random_psd(rng, 4, 2, false, kTol);
    const HermitianMatrix other = random_psd(rng, 4, 3, false, kTol);
    CHECK_THROWS_AS(parallel_offset(a, other, random_subspace(rng, 4, 2, false, kTol), kTol),
                    RangeMismatch);
}
