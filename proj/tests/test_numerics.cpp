#include "mubcube/numerics.hpp"

#include "mubcube/cube.hpp"
#include "mubcube/families.hpp"
#include "mubcube/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace mubcube;

TEST_CASE("tolerance policy orders its two tiers") {
    CHECK_NOTHROW(Tolerance(1e-9, 1e-6));
    CHECK_THROWS_AS(Tolerance(1e-6, 1e-9), Error);
    CHECK_THROWS_AS(Tolerance(0.0, 1e-6), Error);
    CHECK_THROWS_AS(Tolerance(1e-9, 1.5), Error);
}

TEST_CASE("hs_inner of identities is the dimension") {
    const Matrix id3 = Matrix::Identity(3, 3);
    CHECK(std::abs(hs_inner(id3, id3) - Complex(3.0, 0.0)) < 1e-15);
}

TEST_CASE("hs_inner with itself is a nonnegative real") {
    SplitMix64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = test::random_matrix(4, rng);
        const Complex v = hs_inner(a, a);
        CHECK(v.real() >= 0.0);
        CHECK(std::abs(v.imag()) < 1e-12 * (1.0 + v.real()));
    }
}

TEST_CASE("hs_inner is conjugate-symmetric") {
    SplitMix64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = test::random_matrix(5, rng);
        const Matrix b = test::random_matrix(5, rng);
        CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
    }
}

TEST_CASE("hs_inner rejects shape mismatch") {
    CHECK_THROWS_AS(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("MUB-pair projection products form an orthogonal basis scaled by 1/d") {
    // A_{j,k} = P_j Q_k built from an unbiased pair; <A_{j,k}, A_{j',k'}> =
    // delta delta / d.
    const MubSystem t = fixtures::standard_triplet_d3();
    const Matrix& x = t.bases[0].u;
    const Matrix& y = t.bases[1].u;
    const int d = 3;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int j2 = 0; j2 < d; ++j2)
                for (int k2 = 0; k2 < d; ++k2) {
                    const Matrix a = (x.col(j) * x.col(j).adjoint()) *
                                     (y.col(k) * y.col(k).adjoint());
                    const Matrix b = (x.col(j2) * x.col(j2).adjoint()) *
                                     (y.col(k2) * y.col(k2).adjoint());
                    const Complex ip = hs_inner(a, b);
                    const double expected = (j == j2 && k == k2) ? 1.0 / d : 0.0;
                    CHECK(std::abs(ip - Complex(expected, 0.0)) < 1e-13);
                }
}

TEST_CASE("is_unitary accepts scaled Hadamard family members and rejects rank one") {
    CHECK(is_unitary(Matrix::Identity(4, 4), 1e-12));
    const Matrix ft = fourier_transposed_matrix(FourierParams{});
    CHECK(is_unitary(ft / std::sqrt(6.0), 1e-9));
    CHECK_FALSE(is_unitary(Matrix::Ones(3, 3), 1e-6));
}

TEST_CASE("is_unitary is stable under permutations and unimodular diagonals") {
    SplitMix64 rng(13);
    for (int t = 0; t < 10; ++t) {
        const Matrix u = test::random_unitary(5, rng);
        REQUIRE(is_unitary(u, 1e-12));
        const Matrix p = test::permutation_matrix_rows(test::random_permutation(5, rng));
        const Vector d = test::random_unimodular_diag(5, rng);
        CHECK(is_unitary(p * u, 1e-12));
        CHECK(is_unitary(u * d.asDiagonal(), 1e-12));
        CHECK(is_unitary(Matrix(d.asDiagonal() * u * p), 1e-12));
    }
}

TEST_CASE("rank-one projection predicate") {
    Matrix p = Matrix::Zero(3, 3);
    p(0, 0) = 1.0;
    CHECK(is_rank_one_projection(p, 1e-12));
    CHECK_FALSE(is_rank_one_projection(Matrix::Identity(3, 3), 1e-6));

    // Reconstruction projections of an analytic cube are rank-one.
    const HadamardCube cube = build_cube(fixtures::standard_triplet_d3());
    for (const Matrix& r : reconstruction_projections(cube)) {
        CHECK(is_rank_one_projection(r, 1e-12));
    }
}

TEST_CASE("principal eigenvector extraction and phase convention") {
    Matrix p = Matrix::Zero(3, 3);
    p(1, 1) = 1.0;
    const Vector e2 = principal_unit_eigenvector(p, 1e-12);
    CHECK(std::abs(e2(1) - Complex(1.0, 0.0)) < 1e-12);

    Vector v(2);
    v << Complex(1.0, 0.0) / std::sqrt(2.0), Complex(0.0, 1.0) / std::sqrt(2.0);
    const Matrix vv = v * v.adjoint();
    const Vector got = principal_unit_eigenvector(vv, 1e-12);
    CHECK((got - v).norm() < 1e-12);

    CHECK_THROWS_AS(principal_unit_eigenvector(Matrix(0.5 * p), 1e-9), NoPrincipalEigenvector);
}

TEST_CASE("eigenvector round trip on phase-normalized unit vectors") {
    SplitMix64 rng(14);
    for (int t = 0; t < 50; ++t) {
        Vector v(6);
        for (int i = 0; i < 6; ++i)
            v(i) = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        v.normalize();
        v = phase_normalized(v);
        const Vector got = principal_unit_eigenvector(Matrix(v * v.adjoint()), 1e-10);
        CHECK(max_abs(Matrix(v * v.adjoint() - got * got.adjoint())) < 1e-9);
        CHECK((got - v).norm() < 1e-9);
    }
}

TEST_CASE("splitmix stream is stable") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SplitMix64 c(43);
    CHECK(SplitMix64(42).next() != c.next());
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
}
