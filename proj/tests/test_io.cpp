#include "mubcube/io.hpp"

#include "mubcube/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace mubcube;

TEST_CASE("matrix JSON round trip is lossless") {
    SplitMix64 rng(91);
    for (int t = 0; t < 5; ++t) {
        const Matrix m = test::random_matrix(6, rng);
        const Matrix back = io::matrix_from_json(io::matrix_to_json(m));
        CHECK(max_abs(Matrix(m - back)) == 0.0);
    }
}

TEST_CASE("matrix JSON round trips through text") {
    SplitMix64 rng(92);
    const Matrix m = test::random_matrix(4, rng);
    const std::string text = io::matrix_to_json(m).dump();
    const Matrix back = io::matrix_from_json(io::json::parse(text));
    CHECK(max_abs(Matrix(m - back)) == 0.0);
}

TEST_CASE("hadamard JSON re-validates on read") {
    const HadamardMatrix h = fourier_transposed(FourierParams{});
    const io::json j = io::hadamard_to_json(h);
    const HadamardMatrix back = io::hadamard_from_json(j);
    CHECK(max_abs(Matrix(h.m - back.m)) == 0.0);
    CHECK(back.tol_used == h.tol_used);

    io::json bad = j;
    bad["kind"] = "other";
    CHECK_THROWS_AS(io::hadamard_from_json(bad), Error);

    io::json corrupt = j;
    corrupt["re"][0][0] = 5.0;
    CHECK_THROWS_AS(io::hadamard_from_json(corrupt), NotUnimodular);
}

TEST_CASE("mub system and cube round trips") {
    const MubSystem t = fixtures::standard_triplet_d3();
    const MubSystem back = io::mub_from_json(io::mub_to_json(t));
    CHECK(back.dim == 3);
    REQUIRE(back.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(max_abs(Matrix(back.bases[i].u - t.bases[i].u)) == 0.0);

    const HadamardCube c = build_cube(t);
    const HadamardCube cback = io::cube_from_json(io::cube_to_json(c));
    CHECK(max_entry_difference(c, cback) == 0.0);
}

TEST_CASE("report and classification JSON carry the expected keys") {
    const HadamardCube c = build_cube(fixtures::standard_triplet_d3());
    const io::json rep = io::report_to_json(verify_axioms(c, 1e-9));
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("checks").size() == 4);
    for (const auto& chk : rep.at("checks")) {
        CHECK(chk.contains("name"));
        CHECK(chk.contains("residual"));
        CHECK(chk.contains("bound"));
    }

    const io::json cls =
        io::classification_to_json(classify(build_cube(fixtures::tensor_triplet_d6()), 1e-6));
    CHECK(cls.at("class").get<std::string>() == "exceptional");
}

TEST_CASE("conjecture report JSON exposes both gamma2 factors") {
    const HadamardMatrix h = fourier_transposed(FourierParams{});
    const io::json j = io::conjecture_to_json(conjecture_identity(h, h, h));
    CHECK(j.at("gamma1_terms").size() == 3);
    CHECK(j.at("gamma2_terms").size() == 3);
    CHECK(j.contains("gamma2_factors_h"));
    CHECK(j.contains("gamma2_factors_hstar"));
    CHECK(j.contains("total"));
}

TEST_CASE("experiment JSON and CSV are well-formed for a single run") {
    SearchConfig cfg;
    cfg.max_iters = 1500;
    cfg.polish_iters = 1000;
    const ExperimentReport rep = experiment(1, cfg, 5, 1);
    const io::json j = io::experiment_to_json(rep);
    CHECK(j.at("runs").get<int>() == 1);
    CHECK(j.at("per_run").size() == 1);
    CHECK(j.contains("conjecture_residuals"));
    CHECK(j.contains("role_assignments"));

    const std::string csv = io::experiment_csv(rep);
    CHECK(csv.find("run,seed,status") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
