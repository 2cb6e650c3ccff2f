#include "mubcube/io.hpp"

#include <fstream>
#include <sstream>

namespace mubcube::io {

namespace {

json complex_grid(const Matrix& m, bool real) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(real ? m(i, j).real() : m(i, j).imag());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    return json{{"dim", m.rows()}, {"re", complex_grid(m, true)}, {"im", complex_grid(m, false)}};
}

Matrix matrix_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
        throw Error("matrix_from_json: row count does not match dim");
    Matrix m(d, d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(re[r].size()) != d || static_cast<int>(im[r].size()) != d)
            throw Error("matrix_from_json: column count does not match dim");
        for (int c = 0; c < d; ++c)
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    return m;
}

json hadamard_to_json(const HadamardMatrix& h) {
    json j = matrix_to_json(h.m);
    j["kind"] = "hadamard";
    j["tol"] = h.tol_used;
    return j;
}

HadamardMatrix hadamard_from_json(const json& j) {
    if (j.value("kind", "") != "hadamard") throw Error("hadamard_from_json: kind mismatch");
    return validate_hadamard(matrix_from_json(j), j.at("tol").get<double>());
}

json mub_to_json(const MubSystem& sys) {
    json bases = json::array();
    for (const Basis& b : sys.bases) bases.push_back(matrix_to_json(b.u));
    return json{{"dim", sys.dim}, {"bases", std::move(bases)}, {"tol", sys.tol_used}};
}

MubSystem mub_from_json(const json& j) {
    std::vector<Matrix> bases;
    for (const auto& b : j.at("bases")) bases.push_back(matrix_from_json(b));
    return validate_mub(bases, j.at("tol").get<double>());
}

json cube_to_json(const HadamardCube& c) {
    const int d = c.dim;
    json re = json::array(), im = json::array();
    for (int j = 0; j < d; ++j) {
        json rj = json::array(), ij = json::array();
        for (int k = 0; k < d; ++k) {
            json rk = json::array(), ik = json::array();
            for (int l = 0; l < d; ++l) {
                rk.push_back(c.at(j, k, l).real());
                ik.push_back(c.at(j, k, l).imag());
            }
            rj.push_back(std::move(rk));
            ij.push_back(std::move(ik));
        }
        re.push_back(std::move(rj));
        im.push_back(std::move(ij));
    }
    return json{{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HadamardCube cube_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    HadamardCube c = HadamardCube::zeros(d);
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int l = 0; l < d; ++l)
                c.at(a, b, l) = Complex(re[a][b][l].get<double>(), im[a][b][l].get<double>());
    return c;
}

json report_to_json(const CubeReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"residual", c.residual},
                              {"bound", c.bound},
                              {"witness", c.witness}});
    }
    return json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

json classification_to_json(const CubeClassification& c) {
    return json{{"class", to_string(c.tag)},
                {"clusters", c.clusters},
                {"conjugate_pairs", c.conjugate_pairs}};
}

json conjecture_to_json(const ConjectureReport& r) {
    return json{{"gamma1_terms", r.gamma1_terms},
                {"gamma2_terms", r.gamma2_products},
                {"gamma2_factors_h", r.gamma2_h},
                {"gamma2_factors_hstar", r.gamma2_hstar},
                {"total", r.total}};
}

json outcome_to_json(const SearchOutcome& o) {
    json fams = json::array();
    for (const FamilyEvidence& f : o.families) {
        fams.push_back(json{{"two_circulant", f.two_circulant},
                            {"szollosi_form", f.szollosi_form},
                            {"szollosi_equiv", f.szollosi_equiv},
                            {"fourier_equiv", f.fourier_equiv},
                            {"transposed_fourier_equiv", f.transposed_fourier_equiv},
                            {"minus_one_rows", f.minus_one_rows}});
    }
    json j{{"seed", o.seed},
           {"status", o.converged() ? "converged" : "stuck"},
           {"final_loss", o.final_loss},
           {"iters", o.iters},
           {"cube_class", o.cube_class}};
    if (o.converged()) {
        j["clusters"] = o.clusters;
        j["conjugate_pairs"] = o.conjugate_pairs;
        j["conjecture_total"] = o.conjecture_total;
        j["max_g_gamma1"] = o.max_g_gamma1;
        j["families"] = std::move(fams);
        j["role"] = o.role;
        j["triplet"] = mub_to_json(*o.triplet);
    }
    return j;
}

json experiment_to_json(const ExperimentReport& r) {
    json per_run = json::array();
    for (const SearchOutcome& o : r.per_run) {
        // Per-run summary only; full triplets are exported via search run.
        json row{{"seed", o.seed},
                 {"status", o.converged() ? "converged" : "stuck"},
                 {"final_loss", o.final_loss},
                 {"iters", o.iters},
                 {"cube_class", o.cube_class}};
        if (o.converged()) {
            row["conjecture_total"] = o.conjecture_total;
            row["max_g_gamma1"] = o.max_g_gamma1;
            row["role"] = o.role;
        }
        per_run.push_back(std::move(row));
    }
    return json{{"runs", r.runs},
                {"converged", r.converged},
                {"stuck", r.stuck_fraction},
                {"generic", r.generic_fraction},
                {"exceptional", r.exceptional_fraction},
                {"other", r.other_fraction},
                {"conjecture_residuals",
                 json{{"max", r.conjecture_max},
                      {"p50", r.conjecture_p50},
                      {"p99", r.conjecture_p99}}},
                {"max_g_gamma1", r.max_g_gamma1},
                {"role_assignments", r.role_counts},
                {"per_run", std::move(per_run)}};
}

std::string experiment_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "run,seed,status,final_loss,iters,cube_class,conjecture_total,max_g_gamma1,role\n";
    out.precision(17);
    for (std::size_t i = 0; i < r.per_run.size(); ++i) {
        const SearchOutcome& o = r.per_run[i];
        out << i << ',' << o.seed << ',' << (o.converged() ? "converged" : "stuck") << ','
            << o.final_loss << ',' << o.iters << ',' << o.cube_class << ',';
        if (o.converged()) {
            out << o.conjecture_total << ',' << o.max_g_gamma1 << ',' << o.role;
        } else {
            out << ",,";
        }
        out << '\n';
    }
    return out.str();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace mubcube::io
