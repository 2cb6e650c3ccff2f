#include "mubcube/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace mubcube {

namespace {

constexpr double kRoot6 = 2.4494897427831780981972840747058914;

// Pattern tables for the Szollosi form. sym indexes the first-row symbols
// (a..f -> 0..5); conj/neg mark the lower blocks.
struct PatternCell {
    int sym;
    bool conj;
    bool neg;
};

const PatternCell kSzPattern[6][6] = {
    {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}, {5, 0, 0}},
    {{2, 0, 0}, {0, 0, 0}, {1, 0, 0}, {5, 0, 0}, {3, 0, 0}, {4, 0, 0}},
    {{1, 0, 0}, {2, 0, 0}, {0, 0, 0}, {4, 0, 0}, {5, 0, 0}, {3, 0, 0}},
    {{3, 1, 0}, {5, 1, 0}, {4, 1, 0}, {0, 1, 1}, {2, 1, 1}, {1, 1, 1}},
    {{4, 1, 0}, {3, 1, 0}, {5, 1, 0}, {1, 1, 1}, {0, 1, 1}, {2, 1, 1}},
    {{5, 1, 0}, {4, 1, 0}, {3, 1, 0}, {2, 1, 1}, {1, 1, 1}, {0, 1, 1}},
};

Complex pattern_value(const PatternCell& cell, const std::array<Complex, 6>& u) {
    Complex v = cell.conj ? std::conj(u[cell.sym]) : u[cell.sym];
    return cell.neg ? -v : v;
}

}  // namespace

FourierParams::FourierParams(Complex x_, Complex y_) : x(x_), y(y_) {
    if (std::abs(std::abs(x) - 1.0) > 1e-9 || std::abs(std::abs(y) - 1.0) > 1e-9) {
        throw Error("FourierParams: x and y must be unimodular");
    }
}

FourierParams FourierParams::from_turns(double x_turns, double y_turns) {
    const double tau = 2.0 * std::numbers::pi;
    return FourierParams(std::polar(1.0, tau * x_turns), std::polar(1.0, tau * y_turns));
}

Matrix fourier_transposed_matrix(const FourierParams& p) {
    const Complex w = kOmega, w2 = kOmega * kOmega;
    const Complex x = p.x, y = p.y;
    Matrix m(6, 6);
    m << 1, 1, 1, 1, 1, 1,                              //
        1, w2, w, x, w2 * x, w * x,                     //
        1, w, w2, y, w * y, w2 * y,                     //
        1, 1, 1, -1, -1, -1,                            //
        1, w2, w, -x, -w2 * x, -w * x,                  //
        1, w, w2, -y, -w * y, -w2 * y;
    return m;
}

HadamardMatrix fourier_transposed(const FourierParams& p) {
    return validate_hadamard(fourier_transposed_matrix(p), 1e-9);
}

HadamardMatrix fourier(const FourierParams& p) {
    return validate_hadamard(fourier_transposed_matrix(p).transpose(), 1e-9);
}

std::optional<TwoCirculantBlocks> detect_two_circulant(const HadamardMatrix& h, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("detect_two_circulant: d = 6 only");
    const auto circulant = [&](int r0, int c0) {
        for (int i = 1; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (std::abs(h.m(r0 + i, c0 + j) - h.m(r0, c0 + (j - i + 3) % 3)) > tol)
                    return false;
        return true;
    };
    if (!circulant(0, 0) || !circulant(0, 3) || !circulant(3, 0) || !circulant(3, 3))
        return std::nullopt;
    return TwoCirculantBlocks{h.m.block(0, 0, 3, 3), h.m.block(0, 3, 3, 3),
                              h.m.block(3, 0, 3, 3), h.m.block(3, 3, 3, 3)};
}

bool detect_szollosi_form(const HadamardMatrix& h, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("detect_szollosi_form: d = 6 only");
    std::array<Complex, 6> u;
    for (int j = 0; j < 6; ++j) u[j] = h.m(0, j);
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (std::abs(h.m(i, j) - pattern_value(kSzPattern[i][j], u)) > tol) return false;
    return true;
}

namespace {

// One permutation candidate of the transposed-Fourier probe: dephase
// M[i][j] = H(sigma_i, tau_j) at (0,0) and compare against the template with
// x, y read off the dephased matrix itself.
bool ft_candidate(const Matrix& h, const std::vector<int>& sigma, const std::vector<int>& tau,
                  double tol) {
    const Complex m00 = h(sigma[0], tau[0]);
    std::array<Complex, 6> row0, col0;
    for (int t = 0; t < 6; ++t) {
        row0[t] = h(sigma[0], tau[t]);
        col0[t] = h(sigma[t], tau[0]);
    }
    const auto dephased = [&](int i, int j) {
        return h(sigma[i], tau[j]) * m00 / (col0[i] * row0[j]);
    };

    const Complex w = kOmega, w2 = kOmega * kOmega;
    if (std::abs(dephased(1, 1) - w2) > tol) return false;
    if (std::abs(dephased(1, 2) - w) > tol) return false;
    if (std::abs(dephased(2, 1) - w) > tol) return false;
    if (std::abs(dephased(2, 2) - w2) > tol) return false;
    for (int j = 1; j <= 2; ++j)
        if (std::abs(dephased(3, j) - 1.0) > tol) return false;
    for (int j = 3; j <= 5; ++j)
        if (std::abs(dephased(3, j) + 1.0) > tol) return false;
    if (std::abs(dephased(4, 1) - w2) > tol || std::abs(dephased(4, 2) - w) > tol) return false;
    if (std::abs(dephased(5, 1) - w) > tol || std::abs(dephased(5, 2) - w2) > tol) return false;

    const Complex x = dephased(1, 3);
    if (std::abs(dephased(1, 4) - w2 * x) > tol) return false;
    if (std::abs(dephased(1, 5) - w * x) > tol) return false;
    if (std::abs(dephased(4, 3) + x) > tol) return false;
    if (std::abs(dephased(4, 4) + w2 * x) > tol) return false;
    if (std::abs(dephased(4, 5) + w * x) > tol) return false;

    const Complex y = dephased(2, 3);
    if (std::abs(dephased(2, 4) - w * y) > tol) return false;
    if (std::abs(dephased(2, 5) - w2 * y) > tol) return false;
    if (std::abs(dephased(5, 3) + y) > tol) return false;
    if (std::abs(dephased(5, 4) + w * y) > tol) return false;
    if (std::abs(dephased(5, 5) + w2 * y) > tol) return false;
    return true;
}

template <typename Candidate>
bool permutation_scan(const Candidate& candidate) {
    std::vector<int> sigma(6), tau(6);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            if (candidate(sigma, tau)) return true;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

}  // namespace

bool transposed_fourier_equivalent(const HadamardMatrix& h, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("transposed_fourier_equivalent: d = 6 only");
    return permutation_scan([&](const std::vector<int>& sigma, const std::vector<int>& tau) {
        return ft_candidate(h.m, sigma, tau, tol);
    });
}

bool fourier_equivalent(const HadamardMatrix& h, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("fourier_equivalent: d = 6 only");
    const HadamardMatrix transposed{h.m.transpose(), h.tol_used};
    return transposed_fourier_equivalent(transposed, tol);
}

std::optional<Matrix> szollosi_equivalent(const HadamardMatrix& h, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("szollosi_equivalent: d = 6 only");

    Matrix out(6, 6);
    const Matrix& m = h.m;
    const auto candidate = [&](const std::vector<int>& sg, const std::vector<int>& tu) {
        const auto e = [&](int i, int j) { return m(sg[i], tu[j]); };

        // Gauge-free relation between the (0,3), (3,0) and (3,3) corners;
        // rejects most permutations in a handful of flops.
        if (std::abs(std::conj(e(0, 3)) * e(3, 3) / e(3, 0) + std::conj(e(0, 0))) > tol)
            return false;

        // Solve for the row/column phases and pattern symbols with the
        // gauges r0 = c0 = 1, c3 = 1 and the principal cube root for c1.
        std::array<Complex, 6> u{}, r{}, c{};
        r[0] = c[0] = c[3] = 1.0;
        u[0] = e(0, 0);
        const Complex p = u[0] / e(1, 1);  // r1 * c1
        const Complex c1_cubed = p * e(1, 0) * e(2, 0) / (e(0, 1) * e(2, 1));
        c[1] = std::polar(1.0, std::arg(c1_cubed) / 3.0);
        r[1] = p / c[1];
        u[1] = c[1] * e(0, 1);
        u[2] = r[1] * e(1, 0);
        r[2] = u[1] / e(2, 0);
        c[2] = u[2] / e(0, 2);
        u[3] = e(0, 3);
        r[3] = std::conj(u[3]) / e(3, 0);
        c[4] = u[3] / (r[1] * e(1, 4));
        u[4] = c[4] * e(0, 4);
        r[4] = std::conj(u[4]) / e(4, 0);
        c[5] = u[4] / (r[1] * e(1, 5));
        u[5] = c[5] * e(0, 5);
        r[5] = std::conj(u[5]) / e(5, 0);

        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                out(i, j) = r[i] * c[j] * e(i, j);
                if (std::abs(out(i, j) - pattern_value(kSzPattern[i][j], u)) > tol) return false;
            }
        return true;
    };

    if (permutation_scan(candidate)) return out;
    return std::nullopt;
}

ZaunerBuild zauner_triplet(const Matrix& f1, const Matrix& f2, double tol) {
    if (f1.rows() != 6 || f1.cols() != 6 || f2.rows() != 6 || f2.cols() != 6)
        throw DimensionNotSix("zauner_triplet: d = 6 only");
    for (const Matrix* f : {&f1, &f2}) {
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const double dev = std::abs(std::abs((*f)(i, j)) - 1.0);
                if (dev > tol) throw NotUnimodular(i, j, dev);
            }
    }

    ZaunerBuild build;
    build.triplet = validate_mub({Matrix::Identity(6, 6), f1 / kRoot6, f2 / kRoot6}, tol);
    const Matrix h23 = (f1.adjoint() * f2) / kRoot6;
    build.szollosi_transition = detect_szollosi_form(validate_hadamard(h23, 20.0 * tol), 20.0 * tol);
    return build;
}

HadamardMatrix exceptional_reference() {
    Matrix a(3, 3);
    a << kOmega, 1, 1,  //
        1, kOmega, 1,   //
        1, 1, kOmega;
    Matrix h(6, 6);
    h.block(0, 0, 3, 3) = a;
    h.block(0, 3, 3, 3) = a;
    h.block(3, 0, 3, 3) = a;
    h.block(3, 3, 3, 3) = -a;
    HadamardMatrix wrapped = validate_hadamard(h, 1e-9);
    if (!equivalent(wrapped, fourier(FourierParams{}), 1e-9)) {
        throw Error("exceptional_reference: not equivalent to F(1,1)");
    }
    return wrapped;
}

}  // namespace mubcube
