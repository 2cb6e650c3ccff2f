#pragma once

#include "mubcube/cube.hpp"
#include "mubcube/invariants.hpp"
#include "mubcube/mub.hpp"
#include "mubcube/numerics.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mubcube {

/// Random initialization of the search: three 6x6 phase arrays mapping to
/// the unimodular starting bases X_i = exp(i theta_i)/sqrt(6).
struct PhasePoint {
    std::array<Eigen::Matrix<double, 6, 6>, 3> theta;

    static PhasePoint random(std::uint64_t seed);

    /// Wraps every phase into [0, 2*pi).
    void canonicalize();
};

/// Optimizer state: three free complex matrices. Initialized on the
/// unimodular manifold but not constrained to it.
struct SearchPoint {
    std::array<Eigen::Matrix<Complex, 6, 6>, 3> x;

    static SearchPoint from(const PhasePoint& p);
};

using SearchGradient = std::array<Eigen::Matrix<Complex, 6, 6>, 3>;

/// Orthogonality plus unbiasedness penalty; zero exactly on MUB triplets.
double loss(const Matrix& x1, const Matrix& x2, const Matrix& x3);

double loss(const SearchPoint& p);

double loss(const PhasePoint& p);

/// Exact loss gradient: entry (m,n) of gradient matrix i carries
/// d loss / d Re X_i(m,n) + i * d loss / d Im X_i(m,n), so plain complex
/// steepest descent X -= s * g is correct.
SearchGradient gradient(const SearchPoint& p);

/// Basis matrices X_i = exp(i theta_i)/sqrt(6) of a phase point.
std::array<Matrix, 3> bases_of(const PhasePoint& p);

struct SearchConfig {
    int max_iters = 20000;
    bool line_search = true;     // Armijo backtracking; fixed decay otherwise
    double initial_step = 0.05;
    double step_growth = 1.5;    // accepted-step growth between iterations
    double step_decay = 1.0;     // per-iteration decay when line_search = false
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    bool momentum = false;       // heavy-ball variant
    double momentum_beta = 0.9;
    double converge_loss = 1e-12;
    double polish_loss = 1e-26;  // keep descending well past convergence
    int polish_iters = 8000;
    double stall_decrease = 1e-15;
    int stall_window = 500;
    double search_tol = 1e-6;    // validation tolerance for converged triplets
};

/// Per-transition-matrix family evidence gathered after convergence.
struct FamilyEvidence {
    bool two_circulant = false;
    bool szollosi_form = false;
    bool szollosi_equiv = false;
    bool fourier_equiv = false;
    bool transposed_fourier_equiv = false;
    int minus_one_rows = 0;
};

struct SearchOutcome {
    enum class Status { Converged, Stuck };

    Status status = Status::Stuck;
    std::uint64_t seed = 0;
    double final_loss = 0.0;
    int iters = 0;

    std::optional<MubSystem> triplet;
    std::string cube_class = "not-applicable";
    int clusters = 0;
    int conjugate_pairs = 0;
    double conjecture_total = 0.0;
    double max_g_gamma1 = 0.0;  // max_j max_pi G_{H_j}(pi gamma1)
    std::array<FamilyEvidence, 3> families{};
    std::string role;  // szollosi+fourier+transposed | all-fourier | other

    bool converged() const { return status == Status::Converged; }
};

/// Deterministic gradient descent from the seed-derived start; Converged
/// outcomes carry the validated triplet, cube classification, conjecture
/// residuals and family evidence.
SearchOutcome optimize(std::uint64_t seed, const SearchConfig& cfg);

struct ExperimentReport {
    int runs = 0;
    int converged = 0;
    double stuck_fraction = 0.0;
    double generic_fraction = 0.0;
    double exceptional_fraction = 0.0;
    double other_fraction = 0.0;
    double conjecture_max = 0.0;
    double conjecture_p50 = 0.0;
    double conjecture_p99 = 0.0;
    double max_g_gamma1 = 0.0;
    std::map<std::string, int> role_counts;
    std::vector<SearchOutcome> per_run;
};

/// Runs `n_runs` independent seeds derived from the master seed, fanning out
/// over `jobs` worker threads; aggregation is order-independent.
ExperimentReport experiment(int n_runs, const SearchConfig& cfg, std::uint64_t master_seed,
                            int jobs);

}  // namespace mubcube
