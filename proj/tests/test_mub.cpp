#include "mubcube/mub.hpp"

#include "mubcube/cube.hpp"
#include "mubcube/families.hpp"
#include "mubcube/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace mubcube;

namespace {

MubSystem rotated_rephased(const MubSystem& t, SplitMix64& rng) {
    const Matrix u = test::random_unitary(t.dim, rng);
    std::vector<Matrix> bases;
    for (const Basis& b : t.bases)
        bases.push_back(u * b.u * test::random_unimodular_diag(t.dim, rng).asDiagonal());
    return validate_mub(bases, t.tol_used * 10);
}

}  // namespace

TEST_CASE("validate_mub accepts the (I, F/sqrt6) pair and rejects (I, I)") {
    const Matrix f_cols = fourier_transposed_matrix(FourierParams{}).transpose() / std::sqrt(6.0);
    CHECK_NOTHROW(validate_mub({Matrix::Identity(6, 6), f_cols}, 1e-9));
    CHECK_THROWS_AS(validate_mub({Matrix::Identity(6, 6), Matrix::Identity(6, 6)}, 1e-9),
                    NotUnbiased);
}

TEST_CASE("the d = 3 standard triplet is unbiased entry by entry") {
    const MubSystem t = fixtures::standard_triplet_d3();
    // Direct 27-product oracle, independent of validate_mub internals.
    const double target = 1.0 / std::sqrt(3.0);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const Complex ip = t.bases[a].u.col(j).dot(t.bases[b].u.col(k));
                    CHECK(std::abs(std::abs(ip) - target) < 1e-14);
                }
}

TEST_CASE("unitary rotation leaves unbiasedness residuals unchanged") {
    const MubSystem t = fixtures::standard_triplet_d3();
    SplitMix64 rng(31);
    const Matrix u = test::random_unitary(3, rng);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const double before = unbiasedness_residual(t.bases[a].u, t.bases[b].u);
            const double after =
                unbiasedness_residual(Matrix(u * t.bases[a].u), Matrix(u * t.bases[b].u));
            CHECK(std::abs(before - after) < 1e-12);
        }
}

TEST_CASE("transition matrix in d = 2 and its adjoint relation") {
    Matrix y(2, 2);
    y << 1, 1, 1, -1;
    y /= std::sqrt(2.0);
    const Basis bx{Matrix::Identity(2, 2)}, by{y};
    const HadamardMatrix h = transition(bx, by, 1e-9);
    Matrix expected(2, 2);
    expected << 1, 1, 1, -1;
    CHECK(max_abs(Matrix(h.m - expected)) < 1e-14);

    const HadamardMatrix back = transition(by, bx, 1e-9);
    CHECK(max_abs(Matrix(back.m - h.m.adjoint())) < 1e-14);
}

TEST_CASE("transition of the d = 3 fixture has unimodular entries") {
    const MubSystem t = fixtures::standard_triplet_d3();
    const HadamardMatrix h = transition(t.bases[0], t.bases[1], 1e-9);
    CHECK(unimodularity_residual(h.m) < 1e-14);
    // Haagerup entries inherit unit modulus.
    for (const Complex& g : haagerup(h).values) CHECK(std::abs(std::abs(g) - 1.0) < 1e-12);
}

TEST_CASE("directly equivalent pairs: reflexivity and per-vector phase changes") {
    const MubSystem t = fixtures::standard_triplet_d3();
    const BasisPair p{t.bases[0], t.bases[1]};

    REQUIRE(directly_equivalent_pairs(p, p, 1e-9).has_value());

    SplitMix64 rng(32);
    const BasisPair q{Basis{t.bases[0].u * test::random_unimodular_diag(3, rng).asDiagonal()},
                      Basis{t.bases[1].u * test::random_unimodular_diag(3, rng).asDiagonal()}};
    const auto u = directly_equivalent_pairs(p, q, 1e-9);
    REQUIRE(u.has_value());
    // Phases are quotiented out, so the intertwiner is a global phase.
    CHECK(std::abs(std::abs((*u)(0, 0)) - 1.0) < 1e-10);
    CHECK(max_abs(Matrix(*u - (*u)(0, 0) * Matrix::Identity(3, 3))) < 1e-9);
}

TEST_CASE("directly equivalent pairs recover a rotated intertwiner") {
    const MubSystem t = fixtures::standard_triplet_d3();
    const BasisPair p{t.bases[0], t.bases[1]};
    SplitMix64 rng(33);
    const Matrix u0 = test::random_unitary(3, rng);
    const BasisPair q{Basis{u0 * t.bases[0].u * test::random_unimodular_diag(3, rng).asDiagonal()},
                      Basis{u0 * t.bases[1].u * test::random_unimodular_diag(3, rng).asDiagonal()}};
    const auto u = directly_equivalent_pairs(p, q, 1e-9);
    REQUIRE(u.has_value());
    // U carries every projection of the first pair onto the second pair's.
    for (int which = 0; which < 2; ++which) {
        const Matrix& a = which == 0 ? p.first.u : p.second.u;
        const Matrix& b = which == 0 ? q.first.u : q.second.u;
        for (int j = 0; j < 3; ++j) {
            const Matrix pa = a.col(j) * a.col(j).adjoint();
            const Matrix pb = b.col(j) * b.col(j).adjoint();
            CHECK(max_abs(Matrix(*u * pa * u->adjoint() - pb)) < 1e-9);
        }
    }
}

TEST_CASE("pairs with different Haagerup tensors are not directly equivalent") {
    const Matrix h1 = fourier_transposed_matrix(FourierParams{});
    const Matrix h2 =
        fourier_transposed_matrix(FourierParams(std::polar(1.0, 0.7), std::polar(1.0, 1.3)));
    CHECK(max_difference(haagerup(validate_hadamard(h1, 1e-9)),
                         haagerup(validate_hadamard(h2, 1e-9))) > 0.1);

    const double s = std::sqrt(6.0);
    const BasisPair p{Basis{Matrix::Identity(6, 6)}, Basis{h1 / s}};
    const BasisPair q{Basis{Matrix::Identity(6, 6)}, Basis{h2 / s}};
    CHECK_FALSE(directly_equivalent_pairs(p, q, 1e-6).has_value());
}

TEST_CASE("permutational equivalence of pairs") {
    const MubSystem t = fixtures::standard_triplet_d3();
    const BasisPair p{t.bases[0], t.bases[1]};

    // Swapping the roles of the bases matches through the adjoint branch.
    const BasisPair swapped{t.bases[1], t.bases[0]};
    const auto w = permutationally_equivalent_pairs(p, swapped, 1e-9);
    REQUIRE(w.has_value());

    // Reshuffling basis vectors is absorbed by the permutation matrices.
    SplitMix64 rng(34);
    Matrix shuffled = t.bases[1].u *
                      test::permutation_matrix_rows(test::random_permutation(3, rng)).transpose();
    const BasisPair q{t.bases[0], Basis{shuffled}};
    CHECK(permutationally_equivalent_pairs(p, q, 1e-9).has_value());

    // Inequivalent transition matrices stay inequivalent.
    const double s = std::sqrt(6.0);
    const BasisPair a{Basis{Matrix::Identity(6, 6)},
                      Basis{fourier_transposed_matrix(FourierParams{}) / s}};
    const BasisPair b{
        Basis{Matrix::Identity(6, 6)},
        Basis{fourier_transposed_matrix(FourierParams(std::polar(1.0, 0.7), std::polar(1.0, 1.3))) /
              s}};
    CHECK_FALSE(permutationally_equivalent_pairs(a, b, 1e-6).has_value());
}

TEST_CASE("triplet equivalence is cube equality") {
    const MubSystem t = fixtures::standard_triplet_d3();
    SplitMix64 rng(35);
    const MubSystem moved = rotated_rephased(t, rng);
    CHECK(directly_equivalent_triplets(t, moved, 1e-7));

    // Reordering the third basis moves cube entries around.
    Matrix z = t.bases[2].u;
    z.col(0).swap(z.col(1));
    const MubSystem reordered = validate_mub({t.bases[0].u, t.bases[1].u, z}, 1e-9);
    CHECK(max_entry_difference(build_cube(t), build_cube(reordered)) > 0.1);
    CHECK_FALSE(directly_equivalent_triplets(t, reordered, 1e-7));
}

TEST_CASE("equivalent triplets have matching re-phased transitions") {
    const MubSystem t = fixtures::standard_triplet_d3();
    SplitMix64 rng(36);
    const MubSystem moved = rotated_rephased(t, rng);
    REQUIRE(directly_equivalent_triplets(t, moved, 1e-7));
    for (int i = 0; i < 3; ++i) {
        const BasisPair p{t.bases[i], t.bases[(i + 1) % 3]};
        const BasisPair q{moved.bases[i], moved.bases[(i + 1) % 3]};
        CHECK(directly_equivalent_pairs(p, q, 1e-8).has_value());
    }
}
