#include "mubcube/search.hpp"

#include "mubcube/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace mubcube {

namespace {

using C66 = Eigen::Matrix<Complex, 6, 6>;

constexpr double kTarget = 0.40824829046386301636621401245098189866;  // 1/sqrt(6)
constexpr double kRoot6 = 2.4494897427831780981972840747058913920;

double loss_impl(const std::array<C66, 3>& x) {
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        C66 gram = x[i].adjoint() * x[i];
        gram.diagonal().array() -= 1.0;
        total += gram.squaredNorm();
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const C66 m = x[i].adjoint() * x[j];
            for (int k = 0; k < 6; ++k)
                for (int l = 0; l < 6; ++l) {
                    const double dev = std::abs(m(k, l)) - kTarget;
                    total += dev * dev;
                }
        }
    return total;
}

SearchGradient gradient_impl(const std::array<C66, 3>& x) {
    SearchGradient grad;
    for (auto& g : grad) g.setZero();

    for (int i = 0; i < 3; ++i) {
        C66 gram = x[i].adjoint() * x[i];
        gram.diagonal().array() -= 1.0;
        grad[i] += 4.0 * (x[i] * gram);
    }

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const C66 m = x[i].adjoint() * x[j];
            C66 w;
            for (int k = 0; k < 6; ++k)
                for (int l = 0; l < 6; ++l) {
                    const double a = std::abs(m(k, l));
                    w(k, l) = a < 1e-300 ? Complex(0.0, 0.0)
                                         : (a - kTarget) / a * std::conj(m(k, l));
                }
            grad[i] += 2.0 * (x[j] * w.transpose());
            grad[j] += 2.0 * (x[i] * w.conjugate());
        }
    return grad;
}

double grad_norm_sq(const SearchGradient& g) {
    return g[0].squaredNorm() + g[1].squaredNorm() + g[2].squaredNorm();
}

}  // namespace

PhasePoint PhasePoint::random(std::uint64_t seed) {
    SplitMix64 rng(seed);
    PhasePoint p;
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 6; ++m)
            for (int n = 0; n < 6; ++n) p.theta[i](m, n) = rng.next_angle();
    return p;
}

void PhasePoint::canonicalize() {
    const double tau = 2.0 * std::numbers::pi;
    for (auto& t : theta)
        for (int m = 0; m < 6; ++m)
            for (int n = 0; n < 6; ++n) {
                double v = std::fmod(t(m, n), tau);
                if (v < 0.0) v += tau;
                t(m, n) = v;
            }
}

SearchPoint SearchPoint::from(const PhasePoint& p) {
    SearchPoint s;
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 6; ++m)
            for (int n = 0; n < 6; ++n) {
                const double t = p.theta[i](m, n);
                s.x[i](m, n) = Complex(std::cos(t), std::sin(t)) * kTarget;
            }
    return s;
}

std::array<Matrix, 3> bases_of(const PhasePoint& p) {
    const SearchPoint s = SearchPoint::from(p);
    return {Matrix(s.x[0]), Matrix(s.x[1]), Matrix(s.x[2])};
}

double loss(const Matrix& x1, const Matrix& x2, const Matrix& x3) {
    const std::array<const Matrix*, 3> xs{&x1, &x2, &x3};
    std::array<C66, 3> fixed;
    for (int i = 0; i < 3; ++i) {
        if (xs[i]->rows() != 6 || xs[i]->cols() != 6)
            throw DimensionNotSix("loss: 6x6 matrices only");
        fixed[i] = *xs[i];
    }
    return loss_impl(fixed);
}

double loss(const SearchPoint& p) { return loss_impl(p.x); }

double loss(const PhasePoint& p) { return loss(SearchPoint::from(p)); }

SearchGradient gradient(const SearchPoint& p) { return gradient_impl(p.x); }

namespace {

struct Descent {
    SearchPoint point;
    double value = 0.0;
    double step = 0.0;
    SearchGradient velocity{};  // momentum state

    Descent(SearchPoint p, double step0) : point(std::move(p)), step(step0) {
        value = loss(point);
        for (auto& v : velocity) v.setZero();
    }

    // One descent iteration. Returns false when no progress is possible.
    bool advance(const SearchConfig& cfg) {
        const SearchGradient g = gradient(point);
        const double gn2 = grad_norm_sq(g);
        if (gn2 == 0.0) return false;

        if (cfg.momentum) {
            for (int i = 0; i < 3; ++i) {
                velocity[i] = cfg.momentum_beta * velocity[i] - step * g[i];
                point.x[i] += velocity[i];
            }
            step *= cfg.step_decay;
            value = loss(point);
            return true;
        }

        if (!cfg.line_search) {
            for (int i = 0; i < 3; ++i) point.x[i] -= step * g[i];
            step *= cfg.step_decay;
            value = loss(point);
            return true;
        }

        double trial = step;
        for (int attempt = 0; attempt < 90; ++attempt) {
            SearchPoint cand = point;
            for (int i = 0; i < 3; ++i) cand.x[i] -= trial * g[i];
            const double cand_value = loss(cand);
            if (cand_value <= value - cfg.armijo_c * trial * gn2) {
                point = std::move(cand);
                value = cand_value;
                step = trial * cfg.step_growth;
                return true;
            }
            trial *= cfg.backtrack;
            if (trial < 1e-18) break;
        }
        return false;
    }
};

std::string assign_roles(const std::array<FamilyEvidence, 3>& fams) {
    // Try to use each family exactly once across the three transitions.
    const auto has = [&](int idx, int family) {
        switch (family) {
            case 0: return fams[idx].szollosi_equiv;
            case 1: return fams[idx].fourier_equiv;
            default: return fams[idx].transposed_fourier_equiv;
        }
    };
    std::array<int, 3> fam{0, 1, 2};
    do {
        if (has(0, fam[0]) && has(1, fam[1]) && has(2, fam[2])) {
            return "szollosi+fourier+transposed";
        }
    } while (std::next_permutation(fam.begin(), fam.end()));
    if (fams[0].fourier_equiv && fams[1].fourier_equiv && fams[2].fourier_equiv) {
        return "all-fourier";
    }
    return "other";
}

void attach_analysis(SearchOutcome& out, const SearchPoint& p, const SearchConfig& cfg) {
    const std::array<Matrix, 3> xs{Matrix(p.x[0]), Matrix(p.x[1]), Matrix(p.x[2])};
    out.triplet = validate_mub({xs[0], xs[1], xs[2]}, cfg.search_tol);

    const HadamardCube cube = build_cube(*out.triplet);
    const CubeClassification cls = classify(cube, cfg.search_tol);
    out.cube_class = to_string(cls.tag);
    out.clusters = cls.clusters;
    out.conjugate_pairs = cls.conjugate_pairs;

    const double probe_tol = 100.0 * cfg.search_tol;
    const std::array<HadamardMatrix, 3> h{
        validate_hadamard(kRoot6 * (xs[0].adjoint() * xs[1]), 10.0 * cfg.search_tol),
        validate_hadamard(kRoot6 * (xs[1].adjoint() * xs[2]), 10.0 * cfg.search_tol),
        validate_hadamard(kRoot6 * (xs[2].adjoint() * xs[0]), 10.0 * cfg.search_tol)};

    const ConjectureReport rep = conjecture_identity(h[0], h[1], h[2]);
    out.conjecture_total = rep.total;

    out.max_g_gamma1 = 0.0;
    ExponentVector arrangement = kGamma1;
    std::sort(arrangement.begin(), arrangement.end());
    do {
        for (int j = 0; j < 3; ++j)
            out.max_g_gamma1 = std::max(out.max_g_gamma1, G_of(h[j], arrangement));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    for (int j = 0; j < 3; ++j) {
        FamilyEvidence ev;
        ev.two_circulant = detect_two_circulant(h[j], probe_tol).has_value();
        ev.szollosi_form = detect_szollosi_form(h[j], probe_tol);
        ev.szollosi_equiv = szollosi_equivalent(h[j], probe_tol).has_value();
        ev.fourier_equiv = fourier_equivalent(h[j], probe_tol);
        ev.transposed_fourier_equiv = transposed_fourier_equivalent(h[j], probe_tol);
        ev.minus_one_rows = static_cast<int>(minus_one_rows(h[j], 0, 0, probe_tol).size());
        out.families[j] = ev;
    }
    out.role = assign_roles(out.families);
}

}  // namespace

SearchOutcome optimize(std::uint64_t seed, const SearchConfig& cfg) {
    SearchOutcome out;
    out.seed = seed;

    Descent descent(SearchPoint::from(PhasePoint::random(seed)), cfg.initial_step);
    std::vector<double> history{descent.value};

    int iter = 0;
    bool stalled = false;
    while (iter < cfg.max_iters && descent.value >= cfg.converge_loss) {
        if (!descent.advance(cfg)) {
            stalled = true;
            break;
        }
        ++iter;
        history.push_back(descent.value);
        if (iter >= cfg.stall_window &&
            history[iter - cfg.stall_window] - descent.value < cfg.stall_decrease) {
            stalled = true;
            break;
        }
    }

    if (stalled || descent.value >= cfg.converge_loss) {
        out.status = SearchOutcome::Status::Stuck;
        out.final_loss = descent.value;
        out.iters = iter;
        return out;
    }

    // Converged; keep polishing so downstream residuals sit well below the
    // validation tolerance.
    int extra = 0;
    double window_mark = descent.value;
    while (extra < cfg.polish_iters && descent.value > cfg.polish_loss) {
        if (!descent.advance(cfg)) break;
        ++extra;
        if (extra % 200 == 0) {
            if (window_mark - descent.value < 1e-2 * descent.value) break;
            window_mark = descent.value;
        }
    }

    out.status = SearchOutcome::Status::Converged;
    out.final_loss = descent.value;
    out.iters = iter + extra;
    attach_analysis(out, descent.point, cfg);
    return out;
}

ExperimentReport experiment(int n_runs, const SearchConfig& cfg, std::uint64_t master_seed,
                            int jobs) {
    if (n_runs < 1) throw Error("experiment: n_runs must be positive");
    jobs = std::max(1, jobs);

    std::vector<SearchOutcome> outcomes(static_cast<std::size_t>(n_runs));
    const auto worker = [&](int t) {
        for (int i = t; i < n_runs; i += jobs)
            outcomes[static_cast<std::size_t>(i)] = optimize(derive_seed(master_seed, i), cfg);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    ExperimentReport rep;
    rep.runs = n_runs;
    std::vector<double> conjecture_totals;
    int generic = 0, exceptional = 0, other = 0, stuck = 0;
    for (const SearchOutcome& o : outcomes) {
        if (!o.converged()) {
            ++stuck;
            continue;
        }
        ++rep.converged;
        conjecture_totals.push_back(o.conjecture_total);
        rep.conjecture_max = std::max(rep.conjecture_max, o.conjecture_total);
        rep.max_g_gamma1 = std::max(rep.max_g_gamma1, o.max_g_gamma1);
        ++rep.role_counts[o.role];
        if (o.cube_class == "generic") {
            ++generic;
        } else if (o.cube_class == "exceptional") {
            ++exceptional;
        } else {
            ++other;
        }
    }
    const double n = static_cast<double>(n_runs);
    rep.stuck_fraction = stuck / n;
    rep.generic_fraction = generic / n;
    rep.exceptional_fraction = exceptional / n;
    rep.other_fraction = other / n;

    if (!conjecture_totals.empty()) {
        std::sort(conjecture_totals.begin(), conjecture_totals.end());
        const auto rank = [&](double q) {
            const std::size_t idx = static_cast<std::size_t>(
                std::ceil(q * static_cast<double>(conjecture_totals.size())));
            return conjecture_totals[std::min(conjecture_totals.size() - 1,
                                              idx == 0 ? 0 : idx - 1)];
        };
        rep.conjecture_p50 = rank(0.50);
        rep.conjecture_p99 = rank(0.99);
    }
    rep.per_run = std::move(outcomes);
    return rep;
}

}  // namespace mubcube
