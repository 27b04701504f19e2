#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oblique/errors.hpp>
#include <oblique/numcore.hpp>
#include <oblique/random.hpp>

#include "test_support.hpp"

using namespace oblique;
using namespace testsup;

TEST_CASE("svd: identity and diagonal") {
    const SvdResult id = svd(Matrix::Identity(3, 3));
    CHECK(id.sigma.size() == 3);
    for (Index i = 0; i < 3; ++i) CHECK(id.sigma(i) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel(id.u * id.v.adjoint() - Matrix::Identity(3, 3), Matrix::Identity(3, 3)) < 1e-13);

    const SvdResult dg = svd(diag({3.0, 0.0}));
    CHECK(dg.sigma(0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(dg.sigma(1) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("svd: random 5x3 reconstructs its input") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = random_matrix(rng, 5, 3, rep % 2 == 1);
        const SvdResult dec = svd(m);
        Matrix rec = Matrix::Zero(5, 3);
        for (Index i = 0; i < 3; ++i) rec += dec.sigma(i) * dec.u.col(i) * dec.v.col(i).adjoint();
        CHECK(operator_norm(rec - m) <= 1e-12 * operator_norm(m));
    }
}

TEST_CASE("pinv: diagonal, invertible, rank one") {
    CHECK(rel(pinv(diag({2.0, 0.0}), kTol) - diag({0.5, 0.0}), diag({0.5, 0.0})) < 1e-14);

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        Matrix m = random_matrix(rng, 4, 4, rep % 2 == 1);
        m += 3.0 * Matrix::Identity(4, 4);  // keep it comfortably invertible
        // Oracle: direct linear solve.
        const Matrix inv = m.partialPivLu().solve(Matrix::Identity(4, 4));
        CHECK(operator_norm(pinv(m, kTol) - inv) <= 1e-10 * operator_norm(inv));
    }

    Matrix u = random_matrix(rng, 5, 1, true);
    u /= u.norm();
    CHECK(rel(pinv(u, kTol) - u.adjoint(), u.adjoint()) < 1e-13);
}

TEST_CASE("pinv: Penrose identities on random shapes") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        const Index rows = 1 + static_cast<Index>(rng() % 6);
        const Index cols = 1 + static_cast<Index>(rng() % 6);
        const Matrix m = random_matrix(rng, rows, cols, rep % 2 == 1);
        const Matrix mp = pinv(m, kTol);
        CHECK(rel(m * mp * m - m, m) <= kTol.eq);
        CHECK(rel(mp * m * mp - mp, mp) <= kTol.eq);
        const Matrix mmp = m * mp;
        const Matrix mpm = mp * m;
        CHECK(rel(mmp - mmp.adjoint().eval(), mmp) <= kTol.eq);
        CHECK(rel(mpm - mpm.adjoint().eval(), mpm) <= kTol.eq);
    }
}

TEST_CASE("psd_sqrt: diagonal, identity, random PSD") {
    const HermitianMatrix d(diag({4.0, 9.0}), kTol);
    CHECK(rel(psd_sqrt(d, kTol).matrix() - diag({2.0, 3.0}), diag({2.0, 3.0})) < 1e-13);

    const HermitianMatrix eye(Matrix::Identity(4, 4), kTol);
    CHECK(rel(psd_sqrt(eye, kTol).matrix() - Matrix::Identity(4, 4),
              Matrix::Identity(4, 4)) < 1e-14);

    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix g = random_matrix(rng, 6, 4, rep % 2 == 1);
        const HermitianMatrix a(g * g.adjoint(), kTol);
        const HermitianMatrix s = psd_sqrt(a, kTol);
        CHECK(rel(s.matrix() * s.matrix() - a.matrix(), a.matrix()) <= 1e-10);
        CHECK(s.psd_flag().value_or(false));
    }
}

TEST_CASE("psd_sqrt: rejects indefinite input") {
    const HermitianMatrix ind(diag({1.0, -1.0}), kTol);
    CHECK_THROWS_AS(psd_sqrt(ind, kTol), NotPositive);
}

TEST_CASE("psd_sqrt: monotone on commuting diagonal inputs") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        RealVector lo(5), hi(5);
        for (Index i = 0; i < 5; ++i) {
            lo(i) = uniform_real(rng, 0.0, 4.0);
            hi(i) = lo(i) + uniform_real(rng, 0.0, 4.0);
        }
        const Matrix slo = psd_sqrt(HermitianMatrix(lo.cast<Complex>().asDiagonal(), kTol),
                                    kTol).matrix();
        const Matrix shi = psd_sqrt(HermitianMatrix(hi.cast<Complex>().asDiagonal(), kTol),
                                    kTol).matrix();
        for (Index i = 0; i < 5; ++i) CHECK(shi(i, i).real() >= slo(i, i).real() - 1e-12);
    }
}

TEST_CASE("operator_norm: diagonal, oblique block, zero") {
    CHECK(operator_norm(diag({1.0, -2.0})) == doctest::Approx(2.0).epsilon(1e-14));
    // ||(1 x; 0 0)||^2 = 1 + ||x||^2, frozen for x = 1.
    const double expected = std::sqrt(2.0);
    CHECK(operator_norm(mat2(1, 1, 0, 0)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(operator_norm(Matrix::Zero(3, 2)) == 0.0);
}

TEST_CASE("operator_norm: equals sigma[0] and bounds random samples") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix m = random_matrix(rng, 4, 3, false);
        const double norm = operator_norm(m);
        CHECK(norm == svd(m).sigma(0));
        double best = 0.0;
        for (int t = 0; t < 1000; ++t) {
            Matrix v = random_matrix(rng, 3, 1, false);
            if (v.norm() == 0.0) continue;
            best = std::max(best, (m * (v / v.norm())).norm());
        }
        CHECK(best <= norm * (1.0 + 1e-12));
        CHECK(best >= 0.95 * norm);
    }
}

TEST_CASE("HermitianMatrix: construction guards") {
    CHECK_THROWS_AS(HermitianMatrix(mat2(0, 1, 0, 0), kTol), Error);
    CHECK_THROWS_AS(HermitianMatrix::psd(diag({1.0, -2.0}), kTol), NotPositive);
    const HermitianMatrix ok = HermitianMatrix::psd(diag({1.0, 2.0}), kTol);
    CHECK(ok.psd_flag().value_or(false));
    CHECK(HermitianMatrix(diag({1.0, -2.0}), kTol).is_psd(kTol) == false);
}

TEST_CASE("ToleranceProfile: rejects nonpositive entries") {
    CHECK_THROWS_AS(ToleranceProfile(0.0, 1e-8, 1e-8), Error);
    CHECK(ToleranceProfile(1e-6, 1e-8, 1e-8).rank_exceeds_eq());
}
