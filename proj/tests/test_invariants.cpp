#include "mubcube/invariants.hpp"

#include "mubcube/families.hpp"
#include "mubcube/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace mubcube;

namespace {

HadamardMatrix ft11() { return fourier_transposed(FourierParams{}); }

HadamardMatrix f11() { return fourier(FourierParams{}); }

std::vector<Complex> random_binary_vector(SplitMix64& rng) {
    std::vector<Complex> v;
    for (int i = 0; i < 3; ++i) {
        const Complex z = rng.next_phase();
        v.push_back(z);
        v.push_back(-z);
    }
    for (int i = 5; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)],
                  v[rng.next() % static_cast<std::uint64_t>(i + 1)]);
    return v;
}

// Two zero-sum triangles of cube roots at a generic relative rotation: the
// sum vanishes but no two entries are antipodal.
std::vector<Complex> random_nonbinary_zero_sum(SplitMix64& rng) {
    while (true) {
        const Complex z = rng.next_phase();
        const Complex w = rng.next_phase();
        std::vector<Complex> v{z, z * kOmega, z * kOmega * kOmega,
                               w, w * kOmega, w * kOmega * kOmega};
        double closest = 10.0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) closest = std::min(closest, std::abs(v[i] + v[j]));
        if (closest < 0.05) continue;  // antipodal by accident; redraw
        for (int i = 5; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)],
                      v[rng.next() % static_cast<std::uint64_t>(i + 1)]);
        return v;
    }
}

}  // namespace

TEST_CASE("g_of basics") {
    const HadamardMatrix h = ft11();
    CHECK(std::abs(g_of(h, {0, 0, 0, 0, 0, 0}) - Complex(6, 0)) < 1e-14);

    SplitMix64 rng(61);
    for (int t = 0; t < 10; ++t) {
        ExponentVector gamma(6);
        for (int& e : gamma) e = static_cast<int>(rng.next() % 7) - 3;
        ExponentVector neg = gamma;
        for (int& e : neg) e = -e;
        CHECK(std::abs(g_of(h, neg) - std::conj(g_of(h, gamma))) < 1e-12);
    }

    CHECK_THROWS_AS(g_of(h, {1, 1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(g_of(h, {9, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("g_of against an independent power oracle") {
    const HadamardMatrix h = f11();
    Complex oracle{0.0, 0.0};
    for (int k = 0; k < 6; ++k) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < 6; ++j) {
            // Exponentiation through polar form, independent of the
            // conjugation-based route in the library.
            prod *= std::polar(std::pow(std::abs(h.m(j, k)), kGamma1[j]),
                               kGamma1[j] * std::arg(h.m(j, k)));
        }
        oracle += prod;
    }
    CHECK(std::abs(g_of(h, kGamma1) - oracle) < 1e-12);
    // Frozen regression: this sum cancels exactly at (1,1).
    CHECK(std::abs(g_of(h, kGamma1)) < 1e-13);
}

TEST_CASE("G_of is the product of the two signed sums") {
    const HadamardMatrix h = ft11();
    SplitMix64 rng(62);
    for (int t = 0; t < 10; ++t) {
        ExponentVector gamma(6);
        for (int& e : gamma) e = static_cast<int>(rng.next() % 7) - 3;
        ExponentVector neg = gamma;
        for (int& e : neg) e = -e;
        const double g2 = G_of(h, gamma);
        CHECK(g2 >= 0.0);
        const Complex product = g_of(h, gamma) * g_of(h, neg);
        CHECK(std::abs(product - Complex(g2, 0.0)) < 1e-12);
    }
    CHECK(std::abs(G_of(h, {0, 0, 0, 0, 0, 0}) - 36.0) < 1e-12);
}

TEST_CASE("tilde_g agrees across both summation orders") {
    const HadamardMatrix h = ft11();
    CHECK(std::abs(tilde_g(h, {0, 0, 0, 0, 0, 0}) - 720.0 * 36.0) < 1e-9);

    for (const ExponentVector& gamma : {kGamma1, kGamma2, ExponentVector{2, 1, 0, 0, -1, -2}}) {
        const double weighted = tilde_g(h, gamma);
        const double full = tilde_g_full_sum(h, gamma);
        CHECK(std::abs(weighted - full) <= 1e-12 * (1.0 + std::abs(full)));
    }
}

TEST_CASE("tilde_g is invariant under permutations of gamma") {
    const HadamardMatrix h = ft11();
    ExponentVector gamma{3, 1, 0, 0, -1, -3};
    const double base = tilde_g(h, gamma);
    SplitMix64 rng(63);
    for (int t = 0; t < 5; ++t) {
        const auto p = test::random_permutation(6, rng);
        ExponentVector permuted(6);
        for (int i = 0; i < 6; ++i) permuted[i] = gamma[p[i]];
        CHECK(std::abs(tilde_g(h, permuted) - base) <= 1e-12 * (1.0 + std::abs(base)));
    }
}

TEST_CASE("conjecture identity separates family members from outsiders") {
    // Matrices outside the structured families leave a large residual.
    const HadamardMatrix outsider =
        validate_hadamard(test::isolated_cube_root_hadamard(), 1e-9);
    const ConjectureReport rep = conjecture_identity(outsider, outsider, outsider);
    CHECK(rep.total > 1e6);
    for (int j = 0; j < 3; ++j) {
        CHECK(rep.gamma2_products[j] ==
              doctest::Approx(rep.gamma2_h[j] * rep.gamma2_hstar[j]).epsilon(1e-12));
    }

    // Transposed-Fourier members sit inside the vanishing locus: the
    // H-star factor of the gamma2 product dies.
    SplitMix64 rng(64);
    const HadamardMatrix member =
        fourier_transposed(FourierParams(rng.next_phase(), rng.next_phase()));
    const ConjectureReport inside = conjecture_identity(member, member, member);
    CHECK(inside.total < 1e-9);
}

TEST_CASE("conjecture identity is stable under column permutations") {
    SplitMix64 rng(65);
    const HadamardMatrix h1 = ft11();
    const HadamardMatrix h2 =
        fourier_transposed(FourierParams(rng.next_phase(), rng.next_phase()));
    const HadamardMatrix h3 = f11();
    const double base = conjecture_identity(h1, h2, h3).total;

    const auto permute_cols = [&](const HadamardMatrix& h) {
        const Matrix p = test::permutation_matrix_rows(test::random_permutation(6, rng));
        return validate_hadamard(Matrix(h.m * p), 1e-9);
    };
    const double permuted =
        conjecture_identity(permute_cols(h1), permute_cols(h2), permute_cols(h3)).total;
    CHECK(std::abs(base - permuted) <= 1e-9 * (1.0 + std::abs(base)));

    // Row permutations are absorbed by the S6-symmetrization.
    const auto permute_rows = [&](const HadamardMatrix& h) {
        const Matrix p = test::permutation_matrix_rows(test::random_permutation(6, rng));
        return validate_hadamard(Matrix(p * h.m), 1e-9);
    };
    const double row_permuted =
        conjecture_identity(permute_rows(h1), permute_rows(h2), permute_rows(h3)).total;
    CHECK(std::abs(base - row_permuted) <= 1e-9 * (1.0 + std::abs(base)));
}

TEST_CASE("binary vector detection") {
    const Complex i{0.0, 1.0};
    CHECK(is_binary({1.0, -1.0, i, -i, kOmega, -kOmega}, 1e-12));

    // Sixth roots of unity pair up antipodally.
    std::vector<Complex> sixth;
    for (int k = 0; k < 6; ++k) sixth.push_back(std::polar(1.0, k * std::numbers::pi / 3.0));
    CHECK(is_binary(sixth, 1e-12));

    CHECK_THROWS_AS(is_binary({1.0, -1.0, i}, 1e-12), OddLength);
}

TEST_CASE("greedy pairing agrees with the power-sum criterion") {
    SplitMix64 rng(66);
    for (int t = 0; t < 200; ++t) {
        const auto good = random_binary_vector(rng);
        CHECK(is_binary(good, 1e-9));
        CHECK(binary_power_sums_vanish(good, 1e-9));

        const auto bad = random_nonbinary_zero_sum(rng);
        CHECK_FALSE(is_binary(bad, 1e-9));
        CHECK_FALSE(binary_power_sums_vanish(bad, 1e-9));
    }
}

TEST_CASE("zero-sum unimodular 6-vectors: binary iff an antipodal pair exists") {
    SplitMix64 rng(67);
    int seen_binary = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<Complex> v =
            (t % 2 == 0) ? random_binary_vector(rng) : random_nonbinary_zero_sum(rng);
        double closest = 10.0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) closest = std::min(closest, std::abs(v[a] + v[b]));
        const bool has_antipodal = closest < 1e-9;
        CHECK(is_binary(v, 1e-9) == has_antipodal);
        seen_binary += has_antipodal ? 1 : 0;
    }
    CHECK(seen_binary == 100);
}

TEST_CASE("triple-product pairing on the explicit example") {
    const Complex i{0.0, 1.0};
    const std::array<Complex, 6> x{1.0, -1.0, i, -i, kOmega, -kOmega};
    const auto partner = binary_pairing_from_triple_products(x, 1e-12);
    CHECK(partner[0] == 1);
    CHECK(partner[1] == 3);
    CHECK(partner[2] == 5);
}

TEST_CASE("triple-product pairing on shuffled random instances") {
    SplitMix64 rng(68);
    for (int t = 0; t < 200; ++t) {
        std::array<Complex, 6> x;
        x[0] = rng.next_phase();
        x[2] = rng.next_phase();
        x[4] = rng.next_phase();
        std::array<Complex, 3> evens{-x[0], -x[2], -x[4]};
        for (int i = 2; i > 0; --i)
            std::swap(evens[static_cast<std::size_t>(i)],
                      evens[rng.next() % static_cast<std::uint64_t>(i + 1)]);
        x[1] = evens[0];
        x[3] = evens[1];
        x[5] = evens[2];

        const auto partner = binary_pairing_from_triple_products(x, 1e-10);
        CHECK(std::abs(x[0] + x[partner[0]]) < 1e-9);
        CHECK(std::abs(x[2] + x[partner[1]]) < 1e-9);
        CHECK(std::abs(x[4] + x[partner[2]]) < 1e-9);
    }
}

TEST_CASE("triple-product pairing covers the odd-odd cancellation corner") {
    SplitMix64 rng(69);
    for (int t = 0; t < 100; ++t) {
        const Complex u = rng.next_phase();
        const Complex v = rng.next_phase();
        // x3 + x5 = 0 by construction; w = +-v closes the preconditions.
        for (const Complex w : {v, -v}) {
            const std::array<Complex, 6> x{u, -u, v, w, -v, -w};
            const auto partner = binary_pairing_from_triple_products(x, 1e-10);
            CHECK(std::abs(x[0] + x[partner[0]]) < 1e-9);
            CHECK(std::abs(x[2] + x[partner[1]]) < 1e-9);
            CHECK(std::abs(x[4] + x[partner[2]]) < 1e-9);
        }
    }
}

TEST_CASE("triple-product pairing rejects violated preconditions") {
    SplitMix64 rng(70);
    std::array<Complex, 6> x;
    for (auto& z : x) z = rng.next_phase();
    CHECK_THROWS_AS(binary_pairing_from_triple_products(x, 1e-10), PreconditionFailed);
}

TEST_CASE("mu_of sign patterns") {
    const auto m1 = mu_of({0, 1, 2});
    CHECK(m1 == std::array<int, 6>{-1, -1, -1, 1, 1, 1});
    const auto m2 = mu_of({0, 2, 4});
    CHECK(m2 == std::array<int, 6>{-1, 1, -1, 1, -1, 1});
    CHECK_THROWS_AS(mu_of({0, 1}), Error);
    CHECK_THROWS_AS(mu_of({0, 0, 1}), Error);
    CHECK_THROWS_AS(mu_of({0, 1, 6}), Error);
}

TEST_CASE("I-binary transitions of the Zauner reference triplet") {
    const auto [f1, f2] = fixtures::zauner_pair_reference();
    const double s = std::sqrt(6.0);
    const std::array<Matrix, 3> bases{Matrix::Identity(6, 6), f1 / s, f2 / s};
    for (int i = 0; i < 3; ++i) {
        const HadamardMatrix h =
            validate_hadamard(Matrix(s * (bases[i].adjoint() * bases[(i + 1) % 3])), 1e-9);
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) CHECK(is_I_binary(h, {a, b, c}, 1e-9));
    }
}

TEST_CASE("generic family members are not I-binary for every subset") {
    const HadamardMatrix h =
        fourier_transposed(FourierParams(std::polar(1.0, 0.7), std::polar(1.0, 1.3)));
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) count += is_I_binary(h, {a, b, c}, 1e-9) ? 1 : 0;
    CHECK(count < 20);

    const HadamardMatrix outsider =
        validate_hadamard(test::isolated_cube_root_hadamard(), 1e-9);
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) CHECK_FALSE(is_I_binary(outsider, {a, b, c}, 1e-9));
}

TEST_CASE("minus-one row scan") {
    const std::vector<int> rows = minus_one_rows(ft11(), 0, 0, 1e-12);
    CHECK(rows == std::vector<int>{3, 4, 5});

    // Cube-root entries can never dephase onto -1, no matter the scramble
    // or the anchor.
    SplitMix64 rng(71);
    const Matrix m = test::random_unimodular_diag(6, rng).asDiagonal() *
                     test::isolated_cube_root_hadamard() *
                     test::random_unimodular_diag(6, rng).asDiagonal();
    const HadamardMatrix h = validate_hadamard(m, 1e-9);
    CHECK(minus_one_rows(h, 0, 0, 1e-9).empty());
    CHECK(minus_one_rows(h, 2, 3, 1e-9).empty());
}
