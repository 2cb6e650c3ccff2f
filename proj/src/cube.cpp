#include "mubcube/cube.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace mubcube {

ZeroEntry::ZeroEntry(int j_, int k_, int l_)
    : Error("cube entry (" + std::to_string(j_) + "," + std::to_string(k_) + "," +
            std::to_string(l_) + ") is zero; division is undefined"),
      j(j_),
      k(k_),
      l(l_) {}

ProjectionDefect::ProjectionDefect(int idx, double res)
    : Error("reconstruction projection " + std::to_string(idx) +
            " fails the rank-one test, residual " + std::to_string(res)),
      index(idx),
      residual(res) {}

bool CubeReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* CubeReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string to_string(CubeClass c) {
    switch (c) {
        case CubeClass::Generic: return "generic";
        case CubeClass::Exceptional: return "exceptional";
        case CubeClass::Other: return "other";
    }
    return "other";
}

HadamardCube product_cube(const Matrix& h1, const Matrix& h2, const Matrix& h3) {
    const int d = static_cast<int>(h1.rows());
    HadamardCube c = HadamardCube::zeros(d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) c.at(j, k, l) = h1(j, k) * h2(k, l) * h3(l, j);
    return c;
}

HadamardCube build_cube(const MubSystem& triplet) {
    if (triplet.size() != 3) throw Error("build_cube: a triplet of bases is required");
    const double root_d = std::sqrt(static_cast<double>(triplet.dim));
    const Matrix h1 = root_d * (triplet.bases[0].u.adjoint() * triplet.bases[1].u);
    const Matrix h2 = root_d * (triplet.bases[1].u.adjoint() * triplet.bases[2].u);
    const Matrix h3 = root_d * (triplet.bases[2].u.adjoint() * triplet.bases[0].u);
    return product_cube(h1, h2, h3);
}

Matrix slice(const HadamardCube& c, int axis, int index) {
    const int d = c.dim;
    if (index < 0 || index >= d) throw Error("slice: index out of range");
    Matrix s(d, d);
    switch (axis) {
        case 1:
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) s(k, l) = c.at(index, k, l);
            break;
        case 2:
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) s(j, l) = c.at(j, index, l);
            break;
        case 3:
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) s(j, k) = c.at(j, k, index);
            break;
        default: throw Error("slice: axis must be 1, 2 or 3");
    }
    return s;
}

double max_entry_difference(const HadamardCube& a, const HadamardCube& b) {
    if (a.dim != b.dim) throw DimensionMismatch("max_entry_difference: dims differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    return worst;
}

namespace {

CheckResult check_unimodular(const HadamardCube& c, double tol) {
    CheckResult r{"unimodular", true, 0.0, tol, {}};
    for (int j = 0; j < c.dim; ++j)
        for (int k = 0; k < c.dim; ++k)
            for (int l = 0; l < c.dim; ++l) {
                const double dev = std::abs(std::abs(c.at(j, k, l)) - 1.0);
                if (dev > r.residual) {
                    r.residual = dev;
                    r.witness = {j, k, l};
                }
            }
    r.pass = r.residual <= r.bound;
    return r;
}

CheckResult check_piercings(const HadamardCube& c, double tol, bool horizontal_only) {
    const int d = c.dim;
    const double root_d = std::sqrt(static_cast<double>(d));
    CheckResult r{horizontal_only ? "horizontal-sums" : "piercings", true, 0.0, d * tol, {}};
    const auto record = [&](int axis, int a, int b, const Complex& sum) {
        const double dev = std::abs(sum - Complex(root_d, 0.0));
        if (dev > r.residual) {
            r.residual = dev;
            r.witness = {axis, a, b};
        }
    };
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Complex s = 0.0;
            for (int j = 0; j < d; ++j) s += c.at(j, k, l);
            record(1, k, l, s);
        }
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
            Complex s = 0.0;
            for (int k = 0; k < d; ++k) s += c.at(j, k, l);
            record(2, j, l, s);
        }
    if (!horizontal_only) {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Complex s = 0.0;
                for (int l = 0; l < d; ++l) s += c.at(j, k, l);
                record(3, j, k, s);
            }
    }
    r.pass = r.residual <= r.bound;
    return r;
}

CheckResult check_haagerup_all(const HadamardCube& c, double tol) {
    const int d = c.dim;
    const int n = d * d * d;
    CheckResult r{"haagerup", true, 0.0, 10.0 * tol, {}};
    for (int i1 = 0; i1 < n; ++i1) {
        const int j = i1 / (d * d), k = (i1 / d) % d, l = i1 % d;
        for (int i2 = i1; i2 < n; ++i2) {
            const int j2 = i2 / (d * d), k2 = (i2 / d) % d, l2 = i2 % d;
            const Complex black =
                c.at(j2, k, l) * c.at(j, k2, l) * c.at(j, k, l2) * c.at(j2, k2, l2);
            const Complex white =
                c.at(j, k, l) * c.at(j2, k2, l) * c.at(j, k2, l2) * c.at(j2, k, l2);
            const double dev = std::abs(black - white);
            if (dev > r.residual) {
                r.residual = dev;
                r.witness = {j, k, l, j2, k2, l2};
            }
        }
    }
    r.pass = r.residual <= r.bound;
    return r;
}

}  // namespace

CubeReport verify_axioms(const HadamardCube& c, double tol) {
    const int d = c.dim;
    CubeReport report;
    report.checks.push_back(check_unimodular(c, tol));

    CheckResult slices{"slices-hadamard", true, 0.0, tol, {}};
    for (int axis = 1; axis <= 3; ++axis)
        for (int idx = 0; idx < d; ++idx) {
            const double res = hadamard_residual(slice(c, axis, idx));
            if (res > slices.residual) {
                slices.residual = res;
                slices.witness = {axis, idx};
            }
        }
    slices.pass = slices.residual <= slices.bound;
    report.checks.push_back(std::move(slices));

    // Phase-equivalence of parallel slices, decided on the ratio matrix
    // R = S' ./ S: rank-one multiplicative structure means every 2x2
    // ratio-of-ratios is 1.
    CheckResult phase{"parallel-phase-equivalent", true, 0.0, tol, {}};
    for (int axis = 1; axis <= 3; ++axis) {
        for (int s1 = 0; s1 < d; ++s1)
            for (int s2 = s1 + 1; s2 < d; ++s2) {
                const Matrix a = slice(c, axis, s1);
                const Matrix b = slice(c, axis, s2);
                Matrix ratio(d, d);
                bool degenerate = false;
                for (int p = 0; p < d && !degenerate; ++p)
                    for (int q = 0; q < d; ++q) {
                        if (std::abs(a(p, q)) < 1e-12) {
                            degenerate = true;
                            break;
                        }
                        ratio(p, q) = b(p, q) / a(p, q);
                    }
                if (degenerate) {
                    phase.residual = std::numeric_limits<double>::infinity();
                    phase.witness = {axis, s1, s2};
                    continue;
                }
                for (int p1 = 0; p1 < d; ++p1)
                    for (int p2 = p1 + 1; p2 < d; ++p2)
                        for (int q1 = 0; q1 < d; ++q1)
                            for (int q2 = q1 + 1; q2 < d; ++q2) {
                                const double dev = std::abs(ratio(p1, q1) * ratio(p2, q2) /
                                                                (ratio(p1, q2) * ratio(p2, q1)) -
                                                            1.0);
                                if (dev > phase.residual) {
                                    phase.residual = dev;
                                    phase.witness = {axis, s1, s2, p1, p2, q1, q2};
                                }
                            }
            }
    }
    phase.pass = phase.residual <= phase.bound;
    report.checks.push_back(std::move(phase));

    report.checks.push_back(check_piercings(c, tol, /*horizontal_only=*/false));
    return report;
}

double haagerup_condition_residual(const HadamardCube& c, const std::array<int, 3>& t1,
                                   const std::array<int, 3>& t2) {
    const auto [j, k, l] = t1;
    const auto [j2, k2, l2] = t2;
    const Complex black = c.at(j2, k, l) * c.at(j, k2, l) * c.at(j, k, l2) * c.at(j2, k2, l2);
    const Complex white = c.at(j, k, l) * c.at(j2, k2, l) * c.at(j, k2, l2) * c.at(j2, k, l2);
    return std::abs(black - white);
}

bool haagerup_condition(const HadamardCube& c, const std::array<int, 3>& t1,
                        const std::array<int, 3>& t2, double tol) {
    for (int v : {t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]})
        if (v < 0 || v >= c.dim) throw Error("haagerup_condition: index out of range");
    return haagerup_condition_residual(c, t1, t2) <= tol;
}

CubeReport verify_weak_conditions(const HadamardCube& c, double tol) {
    const int d = c.dim;
    CubeReport report;
    report.checks.push_back(check_unimodular(c, tol));

    CheckResult bottom{"bottom-face-hadamard", true, hadamard_residual(slice(c, 3, d - 1)), tol,
                       std::vector<int>{3, d - 1}};
    bottom.pass = bottom.residual <= bottom.bound;
    report.checks.push_back(std::move(bottom));

    CheckResult ortho{"parallel-slice-orthogonality", true, 0.0, tol, {}};
    for (int l1 = 0; l1 < d; ++l1)
        for (int l2 = l1 + 1; l2 < d; ++l2) {
            Complex ip = 0.0;
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) ip += std::conj(c.at(j, k, l1)) * c.at(j, k, l2);
            const double dev = std::abs(ip) / (d * d);
            if (dev > ortho.residual) {
                ortho.residual = dev;
                ortho.witness = {l1, l2};
            }
        }
    ortho.pass = ortho.residual <= ortho.bound;
    report.checks.push_back(std::move(ortho));

    report.checks.push_back(check_haagerup_all(c, tol));
    report.checks.push_back(check_piercings(c, tol, /*horizontal_only=*/true));
    return report;
}

CubeReport verify_inverse_orthogonal(const HadamardCube& c, double tol) {
    const int d = c.dim;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                if (std::abs(c.at(j, k, l)) < 1e-12) throw ZeroEntry(j, k, l);

    CubeReport report;
    CheckResult io{"slice-inverse-orthogonality", true, 0.0, d * tol, {}};
    for (int axis = 1; axis <= 3; ++axis)
        for (int idx = 0; idx < d; ++idx) {
            const Matrix s = slice(c, axis, idx);
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v) {
                    if (u == v) continue;
                    Complex col_sum = 0.0, row_sum = 0.0;
                    for (int t = 0; t < d; ++t) {
                        col_sum += s(t, u) / s(t, v);
                        row_sum += s(u, t) / s(v, t);
                    }
                    const double dev = std::max(std::abs(col_sum), std::abs(row_sum));
                    if (dev > io.residual) {
                        io.residual = dev;
                        io.witness = {axis, idx, u, v};
                    }
                }
        }
    io.pass = io.residual <= io.bound;
    report.checks.push_back(std::move(io));

    report.checks.push_back(check_haagerup_all(c, tol));
    report.checks.push_back(check_piercings(c, tol, /*horizontal_only=*/false));
    return report;
}

std::vector<Matrix> reconstruction_projections(const HadamardCube& c) {
    const int d = c.dim;
    const double inv_root_d = 1.0 / std::sqrt(static_cast<double>(d));

    // Second basis from the bottom face: (f_k)_j = C_{j,k,d-1} / sqrt(d).
    Matrix y(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) y(j, k) = c.at(j, k, d - 1) * inv_root_d;

    // R_l = (1/sqrt(d)) sum_{j,k} C_{j,k,l} Q_k P_j; column j of Q_k P_j is
    // f_k conj((f_k)_j), so R_l = (1/sqrt(d)) Y B with B(k,j) = C_{j,k,l}
    // conj(Y(j,k)).
    std::vector<Matrix> rs;
    rs.reserve(d);
    for (int l = 0; l < d; ++l) {
        Matrix b(d, d);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) b(k, j) = c.at(j, k, l) * std::conj(y(j, k));
        rs.push_back(inv_root_d * (y * b));
    }
    return rs;
}

MubSystem reconstruct_triplet(const HadamardCube& c, double tol) {
    const CubeReport weak = verify_weak_conditions(c, tol);
    if (!weak.pass()) {
        std::string failed;
        for (const auto& chk : weak.checks)
            if (!chk.pass) failed += (failed.empty() ? "" : ", ") + chk.name;
        throw WeakConditionsFailed("reconstruct_triplet: weak conditions failed: " + failed);
    }

    const int d = c.dim;
    const double bound = d * d * tol;
    const double inv_root_d = 1.0 / std::sqrt(static_cast<double>(d));

    Matrix y(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) y(j, k) = c.at(j, k, d - 1) * inv_root_d;

    const std::vector<Matrix> rs = reconstruction_projections(c);
    Matrix z(d, d);
    for (int l = 0; l < d; ++l) {
        const double res = projection_residual(rs[l]);
        if (res > bound) throw ProjectionDefect(l, res);
        z.col(l) = principal_unit_eigenvector(rs[l], bound);
    }

    MubSystem sys = validate_mub({Matrix::Identity(d, d), y, z}, bound);

    const double roundtrip = max_entry_difference(build_cube(sys), c);
    if (roundtrip > std::pow(static_cast<double>(d), 1.5) * tol) {
        throw Error("reconstruct_triplet: rebuilt cube deviates by " + std::to_string(roundtrip));
    }
    return sys;
}

CubeClassification classify(const HadamardCube& c, double tol) {
    if (c.dim != 6) throw DimensionNotSix("classify: cube classification is defined for d = 6");
    const double cluster_tol = std::max(10.0 * tol, 1e-4);

    bool all_roots24 = true;
    for (const Complex& z : c.entries) {
        const double angle = std::arg(z);
        const double step = std::numbers::pi / 12.0;
        const double m = std::round(angle / step);
        const Complex root = std::polar(1.0, m * step);
        if (std::abs(z - root) > cluster_tol) {
            all_roots24 = false;
            break;
        }
    }

    std::vector<Complex> reps;
    for (const Complex& z : c.entries) {
        bool found = false;
        for (const Complex& r : reps)
            if (std::abs(z - r) <= cluster_tol) {
                found = true;
                break;
            }
        if (!found) reps.push_back(z);
    }

    // Involutive conjugate matching over cluster representatives.
    const int n = static_cast<int>(reps.size());
    std::vector<int> mate(n, -1);
    bool perfect = true;
    for (int i = 0; i < n; ++i) {
        int found = -1;
        for (int j = 0; j < n; ++j) {
            if (std::abs(reps[j] - std::conj(reps[i])) <= cluster_tol) {
                if (found >= 0) {
                    found = -1;  // ambiguous match
                    break;
                }
                found = j;
            }
        }
        mate[i] = found;
        if (found < 0 || found == i) perfect = false;
    }
    int pairs = 0;
    for (int i = 0; i < n; ++i) {
        if (mate[i] < 0 || mate[i] == i || mate[mate[i]] != i) {
            perfect = false;
            continue;
        }
        if (mate[i] > i) ++pairs;
    }

    CubeClassification out;
    out.clusters = n;
    out.conjugate_pairs = pairs;
    if (all_roots24) {
        out.tag = CubeClass::Exceptional;
    } else if (n == 72 && perfect && pairs == 36) {
        out.tag = CubeClass::Generic;
    } else {
        out.tag = CubeClass::Other;
    }
    return out;
}

}  // namespace mubcube
