// mubcube: build, verify, reconstruct, classify and search for MUB triplets
// and their Hadamard cubes, with the d = 6 invariant machinery.

#include "mubcube/cube.hpp"
#include "mubcube/families.hpp"
#include "mubcube/fixtures.hpp"
#include "mubcube/invariants.hpp"
#include "mubcube/io.hpp"
#include "mubcube/mub.hpp"
#include "mubcube/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace mubcube;
using io::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

int default_jobs() {
    if (const char* env = std::getenv("MUBCUBE_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        io::save_json(out_path, j);
    }
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

SearchConfig load_config(const std::string& path, double search_tol) {
    SearchConfig cfg;
    cfg.search_tol = search_tol;
    if (path.empty()) return cfg;
    const json j = io::load_json(path);
    cfg.max_iters = j.value("max_iters", cfg.max_iters);
    cfg.line_search = j.value("line_search", cfg.line_search);
    cfg.initial_step = j.value("initial_step", cfg.initial_step);
    cfg.step_growth = j.value("step_growth", cfg.step_growth);
    cfg.step_decay = j.value("step_decay", cfg.step_decay);
    cfg.armijo_c = j.value("armijo_c", cfg.armijo_c);
    cfg.backtrack = j.value("backtrack", cfg.backtrack);
    cfg.momentum = j.value("momentum", cfg.momentum);
    cfg.momentum_beta = j.value("momentum_beta", cfg.momentum_beta);
    cfg.converge_loss = j.value("converge_loss", cfg.converge_loss);
    cfg.polish_loss = j.value("polish_loss", cfg.polish_loss);
    cfg.polish_iters = j.value("polish_iters", cfg.polish_iters);
    cfg.stall_decrease = j.value("stall_decrease", cfg.stall_decrease);
    cfg.stall_window = j.value("stall_window", cfg.stall_window);
    cfg.search_tol = j.value("search_tol", cfg.search_tol);
    return cfg;
}

// Consolidated generate -> verify -> reconstruct -> classify -> conjecture
// report for one triplet.
json pipeline_report(const MubSystem& triplet, double tol, double search_tol) {
    json rep;
    rep["dim"] = triplet.dim;
    rep["triplet_tol"] = triplet.tol_used;

    const HadamardCube cube = build_cube(triplet);
    const CubeReport axioms = verify_axioms(cube, tol);
    const CubeReport weak = verify_weak_conditions(cube, tol);
    const CubeReport inverse = verify_inverse_orthogonal(cube, tol);
    rep["axioms"] = io::report_to_json(axioms);
    rep["weak_conditions"] = io::report_to_json(weak);
    rep["inverse_orthogonal"] = io::report_to_json(inverse);

    bool ok = axioms.pass() && weak.pass() && inverse.pass();

    try {
        const MubSystem rebuilt = reconstruct_triplet(cube, tol);
        const double roundtrip = max_entry_difference(build_cube(rebuilt), cube);
        const bool equivalent_back = directly_equivalent_triplets(rebuilt, triplet, 10.0 * tol);
        rep["reconstruction"] = json{{"roundtrip_residual", roundtrip},
                                     {"directly_equivalent", equivalent_back}};
        ok = ok && equivalent_back;
    } catch (const Error& e) {
        rep["reconstruction"] = json{{"error", e.what()}};
        ok = false;
    }

    if (triplet.dim == 6) {
        rep["classification"] = io::classification_to_json(classify(cube, search_tol));

        const double root_d = std::sqrt(6.0);
        std::array<HadamardMatrix, 3> h{
            transition(triplet.bases[0], triplet.bases[1], root_d * 10.0 * triplet.tol_used),
            transition(triplet.bases[1], triplet.bases[2], root_d * 10.0 * triplet.tol_used),
            transition(triplet.bases[2], triplet.bases[0], root_d * 10.0 * triplet.tol_used)};
        rep["conjecture"] = io::conjecture_to_json(conjecture_identity(h[0], h[1], h[2]));

        json families = json::array();
        const double probe_tol = 100.0 * search_tol;
        for (const HadamardMatrix& hm : h) {
            families.push_back(
                json{{"two_circulant", detect_two_circulant(hm, probe_tol).has_value()},
                     {"szollosi_form", detect_szollosi_form(hm, probe_tol)},
                     {"szollosi_equiv", szollosi_equivalent(hm, probe_tol).has_value()},
                     {"fourier_equiv", fourier_equivalent(hm, probe_tol)},
                     {"transposed_fourier_equiv", transposed_fourier_equivalent(hm, probe_tol)},
                     {"minus_one_rows",
                      static_cast<int>(minus_one_rows(hm, 0, 0, probe_tol).size())}});
        }
        rep["transition_families"] = std::move(families);
    } else {
        rep["classification"] = "not-applicable";
        rep["conjecture"] = "not-applicable";
        rep["transition_families"] = "not-applicable";
    }

    rep["pass"] = ok;
    return rep;
}

int run_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const auto path = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };

    json manifest = json::array();
    const auto record = [&](const std::string& file, const std::string& kind,
                            const std::string& provenance, const std::string& description) {
        manifest.push_back(json{{"file", file},
                                {"kind", kind},
                                {"provenance", provenance},
                                {"description", description}});
    };

    const MubSystem d2 = fixtures::standard_triplet_d2();
    io::save_json(path("triplet_d2.json"), io::mub_to_json(d2));
    record("triplet_d2.json", "mub-triplet", "analytic", "standard d=2 MUB triplet");
    io::save_json(path("cube_d2.json"), io::cube_to_json(build_cube(d2)));
    record("cube_d2.json", "hadamard-cube", "analytic", "cube of the d=2 triplet");

    const MubSystem d3 = fixtures::standard_triplet_d3();
    io::save_json(path("triplet_d3.json"), io::mub_to_json(d3));
    record("triplet_d3.json", "mub-triplet", "analytic", "standard d=3 MUB triplet");
    io::save_json(path("cube_d3.json"), io::cube_to_json(build_cube(d3)));
    record("cube_d3.json", "hadamard-cube", "analytic", "cube of the d=3 triplet");

    const MubSystem d6 = fixtures::tensor_triplet_d6();
    io::save_json(path("triplet_d6_tensor.json"), io::mub_to_json(d6));
    record("triplet_d6_tensor.json", "mub-triplet", "analytic",
           "d=6 tensor-product triplet (exceptional cube)");
    io::save_json(path("cube_d6_tensor.json"), io::cube_to_json(build_cube(d6)));
    record("cube_d6_tensor.json", "hadamard-cube", "analytic", "cube of the tensor triplet");

    io::save_json(path("fourier_t_11.json"),
                  io::hadamard_to_json(fourier_transposed(FourierParams{})));
    record("fourier_t_11.json", "hadamard", "analytic", "transposed Fourier matrix at (1,1)");
    io::save_json(path("fourier_t_omega.json"),
                  io::hadamard_to_json(fourier_transposed(FourierParams(kOmega, kOmega))));
    record("fourier_t_omega.json", "hadamard", "analytic",
           "transposed Fourier matrix at (omega,omega), family intersection point");

    io::save_json(path("exceptional_2circulant.json"),
                  io::hadamard_to_json(exceptional_reference()));
    record("exceptional_2circulant.json", "hadamard", "analytic",
           "2-circulant reference equivalent to F(1,1)");

    const auto [f1, f2] = fixtures::zauner_pair_reference();
    io::save_json(path("zauner_pair.json"),
                  json{{"f1", io::matrix_to_json(f1)}, {"f2", io::matrix_to_json(f2)}});
    record("zauner_pair.json", "zauner-pair", "analytic",
           "regression (F1,F2) pair; (I, F1/sqrt6, F2/sqrt6) is an MUB triplet");

    io::save_json(path("szollosi_instance.json"),
                  io::hadamard_to_json(validate_hadamard(fixtures::szollosi_instance(), 1e-9)));
    record("szollosi_instance.json", "hadamard", "derived",
           "literal 2-circulant conjugate-pattern member extracted from F^T(omega,omega)");

    io::save_json(path("manifest.json"), manifest);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MUB triplets, Hadamard cubes and d=6 invariants"};
    app.require_subcommand(1);

    double tol = 1e-9;
    double search_tol = 1e-6;
    app.add_option("--tol", tol, "tolerance for analytic objects")->capture_default_str();
    app.add_option("--search-tol", search_tol, "tolerance for optimizer outputs")
        ->capture_default_str();

    std::string in_path, out_path, a_path, b_path, format = "json";

    // hadamard
    auto* had = app.add_subcommand("hadamard", "complex Hadamard matrix operations");
    had->require_subcommand(1);
    auto* had_validate = had->add_subcommand("validate", "validate a matrix as Hadamard");
    had_validate->add_option("--in", in_path)->required();
    had_validate->add_option("--out", out_path);
    int dephase_row = 0, dephase_col = 0;
    auto* had_dephase = had->add_subcommand("dephase", "normalize a row and column to ones");
    had_dephase->add_option("--in", in_path)->required();
    had_dephase->add_option("--row", dephase_row)->capture_default_str();
    had_dephase->add_option("--col", dephase_col)->capture_default_str();
    had_dephase->add_option("--out", out_path);
    bool equiv_adjoint = false;
    auto* had_equiv = had->add_subcommand("equiv", "exhaustive equivalence test");
    had_equiv->add_option("--a", a_path)->required();
    had_equiv->add_option("--b", b_path)->required();
    had_equiv->add_flag("--adjoint", equiv_adjoint, "also try the conjugate transpose");
    had_equiv->add_option("--out", out_path);
    auto* had_haag = had->add_subcommand("haagerup", "emit the d^4 invariant tensor");
    had_haag->add_option("--in", in_path)->required();
    had_haag->add_option("--out", out_path);

    // mub
    auto* mub_cmd = app.add_subcommand("mub", "MUB system operations");
    mub_cmd->require_subcommand(1);
    auto* mub_validate = mub_cmd->add_subcommand("validate", "validate a system of bases");
    mub_validate->add_option("--in", in_path)->required();
    int trans_a = 0, trans_b = 1;
    auto* mub_trans = mub_cmd->add_subcommand("transition", "transition Hadamard matrix");
    mub_trans->add_option("--in", in_path)->required();
    mub_trans->add_option("--a", trans_a)->capture_default_str();
    mub_trans->add_option("--b", trans_b)->capture_default_str();
    mub_trans->add_option("--out", out_path);
    bool pair_permutational = false;
    auto* mub_pair = mub_cmd->add_subcommand("equiv-pair", "pair equivalence (bases 0 and 1)");
    mub_pair->add_option("--a", a_path)->required();
    mub_pair->add_option("--b", b_path)->required();
    mub_pair->add_flag("--permutational", pair_permutational);
    auto* mub_triplet = mub_cmd->add_subcommand("equiv-triplet", "direct triplet equivalence");
    mub_triplet->add_option("--a", a_path)->required();
    mub_triplet->add_option("--b", b_path)->required();

    // cube
    auto* cube_cmd = app.add_subcommand("cube", "Hadamard cube operations");
    cube_cmd->require_subcommand(1);
    auto* cube_build = cube_cmd->add_subcommand("build", "cube of a triplet");
    cube_build->add_option("--in", in_path)->required();
    cube_build->add_option("--out", out_path);
    auto* cube_verify = cube_cmd->add_subcommand("verify", "full axiom audit");
    cube_verify->add_option("--in", in_path)->required();
    cube_verify->add_option("--out", out_path);
    auto* cube_weak = cube_cmd->add_subcommand("verify-weak", "weak condition audit");
    cube_weak->add_option("--in", in_path)->required();
    cube_weak->add_option("--out", out_path);
    auto* cube_io = cube_cmd->add_subcommand("verify-io", "inverse-orthogonality audit");
    cube_io->add_option("--in", in_path)->required();
    cube_io->add_option("--out", out_path);
    auto* cube_rec = cube_cmd->add_subcommand("reconstruct", "rebuild a triplet from a cube");
    cube_rec->add_option("--in", in_path)->required();
    cube_rec->add_option("--out", out_path);
    auto* cube_cls = cube_cmd->add_subcommand("classify", "generic/exceptional classification");
    cube_cls->add_option("--in", in_path)->required();
    cube_cls->add_option("--out", out_path);

    // family
    auto* fam = app.add_subcommand("family", "d = 6 structured families");
    fam->require_subcommand(1);
    double x_turns = 0.0, y_turns = 0.0;
    auto* fam_f = fam->add_subcommand("fourier", "Fourier family member F(x,y)");
    fam_f->add_option("--x-turns", x_turns)->capture_default_str();
    fam_f->add_option("--y-turns", y_turns)->capture_default_str();
    fam_f->add_option("--out", out_path);
    auto* fam_ft = fam->add_subcommand("fourier-t", "transposed Fourier family member");
    fam_ft->add_option("--x-turns", x_turns)->capture_default_str();
    fam_ft->add_option("--y-turns", y_turns)->capture_default_str();
    fam_ft->add_option("--out", out_path);
    bool up_to_equivalence = false;
    auto* fam_sz = fam->add_subcommand("szollosi-check", "2-circulant conjugate-pattern test");
    fam_sz->add_option("--in", in_path)->required();
    fam_sz->add_flag("--up-to-equivalence", up_to_equivalence);
    auto* fam_tc = fam->add_subcommand("two-circulant-check", "four circulant blocks test");
    fam_tc->add_option("--in", in_path)->required();
    std::string f1_path, f2_path;
    auto* fam_z = fam->add_subcommand("zauner-build", "validate (I, F1/sqrt6, F2/sqrt6)");
    fam_z->add_option("--f1", f1_path)->required();
    fam_z->add_option("--f2", f2_path)->required();
    fam_z->add_option("--out", out_path);
    auto* fam_exc = fam->add_subcommand("exceptional", "the 2-circulant reference matrix");
    fam_exc->add_option("--out", out_path);

    // inv
    auto* inv = app.add_subcommand("inv", "column power-sum invariants");
    inv->require_subcommand(1);
    std::string gamma_csv = "1,1,1,-1,-1,-1", subset_csv = "1,2,3";
    auto* inv_g = inv->add_subcommand("g", "g_H(gamma)");
    inv_g->add_option("--in", in_path)->required();
    inv_g->add_option("--gamma", gamma_csv)->capture_default_str();
    auto* inv_gg = inv->add_subcommand("G", "|g_H(gamma)|^2");
    inv_gg->add_option("--in", in_path)->required();
    inv_gg->add_option("--gamma", gamma_csv)->capture_default_str();
    auto* inv_tg = inv->add_subcommand("tildeG", "S6-symmetrized G");
    inv_tg->add_option("--in", in_path)->required();
    inv_tg->add_option("--gamma", gamma_csv)->capture_default_str();
    auto* inv_conj = inv->add_subcommand("conjecture", "identity terms for a triplet");
    inv_conj->add_option("--in", in_path)->required();
    inv_conj->add_option("--out", out_path);
    auto* inv_bin = inv->add_subcommand("binary", "antipodal pairing test for a vector");
    inv_bin->add_option("--in", in_path)->required();
    auto* inv_ibin = inv->add_subcommand("ibinary", "I-binary test (1-based subset)");
    inv_ibin->add_option("--in", in_path)->required();
    inv_ibin->add_option("--subset", subset_csv)->capture_default_str();
    auto* inv_m1 = inv->add_subcommand("minus-one-rows", "-1 scan after dephasing");
    inv_m1->add_option("--in", in_path)->required();
    inv_m1->add_option("--row", dephase_row)->capture_default_str();
    inv_m1->add_option("--col", dephase_col)->capture_default_str();

    // search
    auto* search_cmd = app.add_subcommand("search", "numerical triplet search");
    search_cmd->require_subcommand(1);
    std::uint64_t seed = 1, master_seed = 1;
    std::string config_path;
    auto* search_run = search_cmd->add_subcommand("run", "one optimization run");
    search_run->add_option("--seed", seed)->capture_default_str();
    search_run->add_option("--config", config_path);
    search_run->add_option("--out", out_path);
    int runs = 200, jobs = default_jobs();
    auto* search_exp = search_cmd->add_subcommand("experiment", "seed sweep with aggregation");
    search_exp->add_option("--runs", runs)->capture_default_str();
    search_exp->add_option("--jobs", jobs)->capture_default_str();
    search_exp->add_option("--master-seed", master_seed)->capture_default_str();
    search_exp->add_option("--config", config_path);
    search_exp->add_option("--out", out_path);
    search_exp->add_option("--format", format, "json or csv")->capture_default_str();

    // pipeline / fixtures
    std::uint64_t pipeline_seed = 0;
    bool pipeline_use_seed = false;
    auto* pipe = app.add_subcommand("pipeline", "build, verify, reconstruct, classify, check");
    pipe->add_option("--in", in_path, "triplet JSON");
    auto* pipe_seed_opt = pipe->add_option("--search-seed", pipeline_seed,
                                           "optimize this seed instead of reading a file");
    pipe->add_option("--out", out_path);
    auto* fixtures_cmd = app.add_subcommand("fixtures", "write the canonical fixture set");
    fixtures_cmd->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (had_validate->parsed()) {
            const HadamardMatrix h = validate_hadamard(io::matrix_from_json(io::load_json(in_path)), tol);
            emit(io::hadamard_to_json(h), out_path);
            return kOk;
        }
        if (had_dephase->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            emit(io::hadamard_to_json(dephase(h, dephase_row, dephase_col)), out_path);
            return kOk;
        }
        if (had_equiv->parsed()) {
            const HadamardMatrix ha = io::hadamard_from_json(io::load_json(a_path));
            const HadamardMatrix hb = io::hadamard_from_json(io::load_json(b_path));
            const auto w = equiv_adjoint ? adjoint_equivalent(ha, hb, tol) : equivalent(ha, hb, tol);
            if (!w) {
                std::cerr << "not equivalent at tol " << tol << '\n';
                return kVerificationFailed;
            }
            emit(json{{"equivalent", true},
                      {"adjoint_branch", w->adjoint_branch},
                      {"row_perm", w->row_perm},
                      {"col_perm", w->col_perm},
                      {"d1", io::matrix_to_json(Matrix(w->d1.asDiagonal()))},
                      {"d2", io::matrix_to_json(Matrix(w->d2.asDiagonal()))}},
                 out_path);
            return kOk;
        }
        if (had_haag->parsed()) {
            const HaagerupTensor t = haagerup(io::hadamard_from_json(io::load_json(in_path)));
            json re = json::array(), im = json::array();
            for (const Complex& v : t.values) {
                re.push_back(v.real());
                im.push_back(v.imag());
            }
            emit(json{{"dim", t.dim}, {"re", std::move(re)}, {"im", std::move(im)}}, out_path);
            return kOk;
        }
        if (mub_validate->parsed()) {
            const MubSystem sys = io::mub_from_json(io::load_json(in_path));
            emit(json{{"valid", true}, {"dim", sys.dim}, {"bases", sys.size()}}, "");
            return kOk;
        }
        if (mub_trans->parsed()) {
            const MubSystem sys = io::mub_from_json(io::load_json(in_path));
            const HadamardMatrix h =
                transition(sys.bases.at(trans_a), sys.bases.at(trans_b),
                           std::sqrt(static_cast<double>(sys.dim)) * 10.0 * sys.tol_used);
            emit(io::hadamard_to_json(h), out_path);
            return kOk;
        }
        if (mub_pair->parsed()) {
            const MubSystem sa = io::mub_from_json(io::load_json(a_path));
            const MubSystem sb = io::mub_from_json(io::load_json(b_path));
            const BasisPair pa{sa.bases.at(0), sa.bases.at(1)};
            const BasisPair pb{sb.bases.at(0), sb.bases.at(1)};
            bool ok;
            if (pair_permutational) {
                ok = permutationally_equivalent_pairs(pa, pb, tol).has_value();
            } else {
                ok = directly_equivalent_pairs(pa, pb, tol).has_value();
            }
            std::cout << (ok ? "equivalent" : "not equivalent") << '\n';
            return ok ? kOk : kVerificationFailed;
        }
        if (mub_triplet->parsed()) {
            const MubSystem sa = io::mub_from_json(io::load_json(a_path));
            const MubSystem sb = io::mub_from_json(io::load_json(b_path));
            const bool ok = directly_equivalent_triplets(sa, sb, tol);
            std::cout << (ok ? "equivalent" : "not equivalent") << '\n';
            return ok ? kOk : kVerificationFailed;
        }
        if (cube_build->parsed()) {
            const MubSystem sys = io::mub_from_json(io::load_json(in_path));
            emit(io::cube_to_json(build_cube(sys)), out_path);
            return kOk;
        }
        if (cube_verify->parsed() || cube_weak->parsed() || cube_io->parsed()) {
            const HadamardCube c = io::cube_from_json(io::load_json(in_path));
            const CubeReport rep = cube_verify->parsed()   ? verify_axioms(c, tol)
                                   : cube_weak->parsed()   ? verify_weak_conditions(c, tol)
                                                           : verify_inverse_orthogonal(c, tol);
            emit(io::report_to_json(rep), out_path);
            return rep.pass() ? kOk : kVerificationFailed;
        }
        if (cube_rec->parsed()) {
            const HadamardCube c = io::cube_from_json(io::load_json(in_path));
            emit(io::mub_to_json(reconstruct_triplet(c, tol)), out_path);
            return kOk;
        }
        if (cube_cls->parsed()) {
            const HadamardCube c = io::cube_from_json(io::load_json(in_path));
            emit(io::classification_to_json(classify(c, search_tol)), out_path);
            return kOk;
        }
        if (fam_f->parsed() || fam_ft->parsed()) {
            const FourierParams p = FourierParams::from_turns(x_turns, y_turns);
            emit(io::hadamard_to_json(fam_f->parsed() ? fourier(p) : fourier_transposed(p)),
                 out_path);
            return kOk;
        }
        if (fam_sz->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            const bool ok = up_to_equivalence ? szollosi_equivalent(h, tol).has_value()
                                              : detect_szollosi_form(h, tol);
            std::cout << (ok ? "szollosi" : "not szollosi") << '\n';
            return ok ? kOk : kVerificationFailed;
        }
        if (fam_tc->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            const bool ok = detect_two_circulant(h, tol).has_value();
            std::cout << (ok ? "two-circulant" : "not two-circulant") << '\n';
            return ok ? kOk : kVerificationFailed;
        }
        if (fam_z->parsed()) {
            const Matrix f1 = io::matrix_from_json(io::load_json(f1_path));
            const Matrix f2 = io::matrix_from_json(io::load_json(f2_path));
            const ZaunerBuild build = zauner_triplet(f1, f2, tol);
            json j = io::mub_to_json(build.triplet);
            j["szollosi_transition"] = build.szollosi_transition;
            emit(j, out_path);
            return kOk;
        }
        if (fam_exc->parsed()) {
            emit(io::hadamard_to_json(exceptional_reference()), out_path);
            return kOk;
        }
        if (inv_g->parsed() || inv_gg->parsed() || inv_tg->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            const ExponentVector gamma = parse_int_list(gamma_csv);
            if (inv_g->parsed()) {
                const Complex v = g_of(h, gamma);
                emit(json{{"re", v.real()}, {"im", v.imag()}}, "");
            } else if (inv_gg->parsed()) {
                emit(json{{"G", G_of(h, gamma)}}, "");
            } else {
                emit(json{{"tildeG", tilde_g(h, gamma)}}, "");
            }
            return kOk;
        }
        if (inv_conj->parsed()) {
            const MubSystem sys = io::mub_from_json(io::load_json(in_path));
            if (sys.size() != 3) throw Error("conjecture: a triplet is required");
            const double had_tol = std::sqrt(6.0) * 10.0 * sys.tol_used;
            const ConjectureReport rep = conjecture_identity(
                transition(sys.bases[0], sys.bases[1], had_tol),
                transition(sys.bases[1], sys.bases[2], had_tol),
                transition(sys.bases[2], sys.bases[0], had_tol));
            emit(io::conjecture_to_json(rep), out_path);
            return kOk;
        }
        if (inv_bin->parsed()) {
            const json j = io::load_json(in_path);
            std::vector<Complex> v;
            for (std::size_t i = 0; i < j.at("re").size(); ++i)
                v.emplace_back(j.at("re")[i].get<double>(), j.at("im")[i].get<double>());
            const bool ok = is_binary(v, search_tol);
            emit(json{{"binary", ok},
                      {"power_sums_vanish", binary_power_sums_vanish(v, search_tol)}},
                 "");
            return ok ? kOk : kVerificationFailed;
        }
        if (inv_ibin->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            std::vector<int> subset = parse_int_list(subset_csv);
            for (int& s : subset) s -= 1;  // CLI is 1-based
            const bool ok = is_I_binary(h, subset, search_tol);
            emit(json{{"i_binary", ok}}, "");
            return ok ? kOk : kVerificationFailed;
        }
        if (inv_m1->parsed()) {
            const HadamardMatrix h = io::hadamard_from_json(io::load_json(in_path));
            emit(json{{"rows", minus_one_rows(h, dephase_row, dephase_col, search_tol)}}, "");
            return kOk;
        }
        if (search_run->parsed()) {
            const SearchConfig cfg = load_config(config_path, search_tol);
            const SearchOutcome o = optimize(seed, cfg);
            emit(io::outcome_to_json(o), out_path);
            return kOk;
        }
        if (search_exp->parsed()) {
            const SearchConfig cfg = load_config(config_path, search_tol);
            const ExperimentReport rep = experiment(runs, cfg, master_seed, jobs);
            if (format == "csv") {
                if (out_path.empty()) {
                    std::cout << io::experiment_csv(rep);
                } else {
                    io::save_text(out_path, io::experiment_csv(rep));
                }
            } else {
                emit(io::experiment_to_json(rep), out_path);
            }
            return kOk;
        }
        if (pipe->parsed()) {
            pipeline_use_seed = pipe_seed_opt->count() > 0;
            MubSystem triplet;
            if (pipeline_use_seed) {
                const SearchConfig cfg = load_config(config_path, search_tol);
                const SearchOutcome o = optimize(pipeline_seed, cfg);
                if (!o.converged()) {
                    std::cerr << "search did not converge; final loss " << o.final_loss << '\n';
                    return kVerificationFailed;
                }
                triplet = *o.triplet;
            } else {
                if (in_path.empty()) throw CLI::ValidationError("pipeline", "--in or --search-seed");
                triplet = io::mub_from_json(io::load_json(in_path));
            }
            const double pipeline_tol =
                pipeline_use_seed ? search_tol : std::max(tol, triplet.tol_used);
            const json rep = pipeline_report(triplet, pipeline_tol, search_tol);
            emit(rep, out_path);
            return rep.at("pass").get<bool>() ? kOk : kVerificationFailed;
        }
        if (fixtures_cmd->parsed()) {
            return run_fixtures(out_path);
        }
        std::cerr << "no subcommand selected\n";
        return kUsageError;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    } catch (const NotUnimodular& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const NotOrthogonal& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const NotUnitary& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const NotUnbiased& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const WeakConditionsFailed& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const ProjectionDefect& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const ZeroEntry& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternalError;
    }
}
