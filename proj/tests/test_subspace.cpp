#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <oblique/errors.hpp>
#include <oblique/projection.hpp>
#include <oblique/random.hpp>

#include "test_support.hpp"

using namespace oblique;
using namespace testsup;

TEST_CASE("from_spanning: collinear columns, zero matrix, recovery") {
    Matrix cols(3, 2);
    cols << 1, 2, 0, 0, 0, 0;
    const Subspace s = span_of(cols);
    CHECK(s.dim() == 1);
    CHECK(rel(s.projector() - diag({1.0, 0.0, 0.0}), s.projector()) < 1e-13);

    CHECK(span_of(Matrix::Zero(3, 2)).dim() == 0);

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = random_matrix(rng, 6, 3, rep % 2 == 1);
        const Subspace r = span_of(m);
        CHECK(r.dim() == 3);
        CHECK(rel(r.projector() * m - m, m) < 1e-10);
    }
}

TEST_CASE("complement: lines, full space, projector sum") {
    const Subspace e1 = span_of(unit_col(2, 0));
    CHECK(subspace_equal(complement(e1), span_of(unit_col(2, 1))));
    CHECK(complement(Subspace::full(3, kTol)).dim() == 0);

    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 7);
        const Subspace s = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        CHECK(operator_norm(s.projector() + complement(s).projector() -
                            Matrix::Identity(n, n)) <= 1e-10);
        CHECK(subspace_equal(complement(complement(s)), s));
    }
}

TEST_CASE("sum and intersect: coordinates and dimension formula") {
    const Subspace e1 = span_of(unit_col(3, 0));
    const Subspace e2 = span_of(unit_col(3, 1));
    CHECK(sum(e1, e2).dim() == 2);
    CHECK(intersect(e1, e2).dim() == 0);
    CHECK(subspace_equal(sum(e1, e1), e1));
    CHECK(subspace_equal(intersect(e1, e1), e1));

    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 7);
        const Subspace s = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        const Subspace t = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        CHECK(sum(s, t).dim() + intersect(s, t).dim() == s.dim() + t.dim());
    }

    CHECK_THROWS_AS(sum(e1, span_of(unit_col(2, 0))), AmbientMismatch);
}

TEST_CASE("preimage: identity, zero operator, diagonal example") {
    const Subspace t = span_of(unit_col(2, 1));
    CHECK(subspace_equal(preimage(Matrix::Identity(2, 2), t, kTol), t));
    CHECK(preimage(Matrix::Zero(2, 2), t, kTol).dim() == 2);

    // A = diag(1,0), T = span{e2}: A e2 = 0 lies in T, A e1 = e1 does not.
    // Oracle: the kernel of (I - P_T) A computed by hand is span{e2}.
    const Subspace pre = preimage(diag({1.0, 0.0}), t, kTol);
    CHECK(subspace_equal(pre, t));

    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 6);
        Matrix a = random_matrix(rng, n, n, rep % 2 == 1);
        if (rep % 3 == 0) a.col(0).setZero();  // force a kernel
        const Subspace s = random_subspace(rng, n, 1 + static_cast<Index>(rng() % (n - 1)),
                                           rep % 2 == 1, kTol);
        CHECK(subspace_contains(preimage(a, complement(s), kTol), kernel(a, kTol)));
    }
}

TEST_CASE("orth_projector: coordinates and residuals") {
    const Projection p = orth_projector(span_of(unit_col(2, 0)));
    CHECK(rel(p.matrix() - diag({1.0, 0.0}), p.matrix()) < 1e-14);
    CHECK(orth_projector(Subspace::zero(3, kTol)).matrix().isZero(0.0));

    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 7);
        const Subspace s = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        const Matrix pm = orth_projector(s).matrix();
        CHECK(operator_norm(pm * pm - pm) <= 1e-12);
        CHECK(operator_norm(pm - pm.adjoint().eval()) <= 1e-12);
    }
}

TEST_CASE("friedrichs_cos: orthogonal lines, equal subspaces, pi/3") {
    const Subspace e1 = span_of(unit_col(2, 0));
    const Subspace e2 = span_of(unit_col(2, 1));
    CHECK(friedrichs_cos(e1, e2) <= 1e-12);
    CHECK(friedrichs_cos(e1, e1) == 0.0);  // intersection removed, empty sup

    // Two lines at angle theta: cosine equals |<xi, eta>| for the unit
    // spanning vectors. Frozen for theta = pi/3: 0.5.
    const double theta = std::acos(-1.0) / 3.0;
    const Subspace line = span_of(col2(std::cos(theta), std::sin(theta)));
    CHECK(friedrichs_cos(e1, line) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("friedrichs_cos: symmetry properties on random pairs") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 7);
        const Subspace s = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        const Subspace t = random_subspace(rng, n, static_cast<Index>(rng() % (n + 1)),
                                           rep % 2 == 1, kTol);
        const double c = friedrichs_cos(s, t);
        CHECK(std::abs(c - friedrichs_cos(t, s)) <= kTol.norm);
        CHECK(std::abs(c - friedrichs_cos(complement(t), complement(s))) <= kTol.norm);
        const Subspace common = intersect(s, t);
        if (ominus(s, common).dim() > 0 && ominus(t, common).dim() > 0) {
            CHECK(c <= 1.0 - kTol.rank);
        }
    }
}

TEST_CASE("subspace equality ignores basis choice") {
    std::mt19937_64 rng(59);
    const Subspace s = random_subspace(rng, 5, 3, true, kTol);
    const Matrix u = random_unitary(rng, 3, true);
    const Subspace same = Subspace::from_orthonormal(s.basis() * u, kTol);
    CHECK(subspace_equal(s, same));
}
