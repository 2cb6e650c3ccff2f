#include "mubcube/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mubcube {

const ExponentVector kGamma1 = {1, 1, 1, -1, -1, -1};
const ExponentVector kGamma2 = {3, 3, 3, -3, -3, -3};

Complex unimodular_power(Complex z, int n) {
    if (n < 0) {
        z = std::conj(z);
        n = -n;
    }
    Complex out{1.0, 0.0};
    for (int i = 0; i < n; ++i) out *= z;
    return out;
}

Complex g_of(const HadamardMatrix& h, const ExponentVector& gamma) {
    const int d = h.dim();
    if (static_cast<int>(gamma.size()) != d)
        throw DimensionMismatch("g_of: exponent vector length differs from dim");
    for (int e : gamma)
        if (std::abs(e) > 8) throw Error("g_of: exponent out of the sane range [-8, 8]");
    Complex sum{0.0, 0.0};
    for (int k = 0; k < d; ++k) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < d; ++j) prod *= unimodular_power(h.m(j, k), gamma[j]);
        sum += prod;
    }
    return sum;
}

double G_of(const HadamardMatrix& h, const ExponentVector& gamma) {
    return std::norm(g_of(h, gamma));
}

double tilde_g(const HadamardMatrix& h, const ExponentVector& gamma) {
    if (h.dim() != 6 || gamma.size() != 6) throw DimensionNotSix("tilde_g: d = 6 only");
    ExponentVector arrangement = gamma;
    std::sort(arrangement.begin(), arrangement.end());
    double sum = 0.0;
    int distinct = 0;
    do {
        sum += G_of(h, arrangement);
        ++distinct;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return sum * (720.0 / distinct);
}

double tilde_g_full_sum(const HadamardMatrix& h, const ExponentVector& gamma) {
    if (h.dim() != 6 || gamma.size() != 6) throw DimensionNotSix("tilde_g_full_sum: d = 6 only");
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    ExponentVector arrangement(6);
    double sum = 0.0;
    do {
        for (int j = 0; j < 6; ++j) arrangement[j] = gamma[perm[j]];
        sum += G_of(h, arrangement);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

ConjectureReport conjecture_identity(const HadamardMatrix& h1, const HadamardMatrix& h2,
                                     const HadamardMatrix& h3) {
    const std::array<const HadamardMatrix*, 3> hs{&h1, &h2, &h3};
    for (const auto* h : hs)
        if (h->dim() != 6) throw DimensionNotSix("conjecture_identity: d = 6 only");

    ConjectureReport rep;
    for (int j = 0; j < 3; ++j) {
        const HadamardMatrix& h = *hs[j];
        const HadamardMatrix h_star{h.m.adjoint(), h.tol_used};
        rep.gamma1_terms[j] = tilde_g(h, kGamma1);
        rep.gamma2_h[j] = tilde_g(h, kGamma2);
        rep.gamma2_hstar[j] = tilde_g(h_star, kGamma2);
        rep.gamma2_products[j] = rep.gamma2_h[j] * rep.gamma2_hstar[j];
        rep.total += rep.gamma1_terms[j] + rep.gamma2_products[j];
    }
    return rep;
}

bool is_binary(std::vector<Complex> v, double tol) {
    if (v.size() % 2 != 0) throw OddLength("is_binary: vector length must be even");
    const double bound = static_cast<double>(v.size()) * tol;
    while (!v.empty()) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const double r = std::abs(v[i] + v[j]);
                if (r < best) {
                    best = r;
                    bi = i;
                    bj = j;
                }
            }
        if (best > bound) return false;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(bj));
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(bi));
    }
    return true;
}

bool binary_power_sums_vanish(const std::vector<Complex>& v, double tol) {
    if (v.size() % 2 != 0) throw OddLength("binary_power_sums_vanish: length must be even");
    const int n = static_cast<int>(v.size()) / 2;
    const double bound = static_cast<double>(v.size()) * tol;
    for (int k = 1; k <= n; k += 2) {
        Complex p{0.0, 0.0};
        for (const Complex& z : v) p += unimodular_power(z, k);
        if (std::abs(p) > bound) return false;
    }
    return true;
}

std::array<int, 3> binary_pairing_from_triple_products(const std::array<Complex, 6>& x,
                                                       double tol) {
    Complex sum{0.0, 0.0};
    for (const Complex& z : x) sum += z;
    const Complex triple = x[0] * x[2] * x[4] + x[1] * x[3] * x[5];
    if (std::abs(sum) > tol || std::abs(triple) > tol) {
        throw PreconditionFailed("binary_pairing_from_triple_products: zero-sum or triple-product "
                                 "precondition violated");
    }

    // (x1+x2)(x1+x4)(x1+x6) = 0, so some even entry cancels x1. The
    // remaining two assignments cover the proof's case split, including the
    // x3 + x5 = 0 corner where only one of them can close.
    const std::array<int, 3> evens{1, 3, 5};
    std::array<int, 3> best_assign{};
    double best_residual = std::numeric_limits<double>::infinity();
    std::array<int, 3> p = evens;
    std::sort(p.begin(), p.end());
    do {
        const double r = std::max({std::abs(x[0] + x[p[0]]), std::abs(x[2] + x[p[1]]),
                                   std::abs(x[4] + x[p[2]])});
        if (r < best_residual) {
            best_residual = r;
            best_assign = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));

    if (best_residual > 10.0 * tol)
        throw NoPairingFound("binary_pairing_from_triple_products: no assignment closes the "
                             "three cancellations");
    return best_assign;
}

std::array<int, 6> mu_of(const std::vector<int>& subset) {
    if (subset.size() != 3) throw Error("mu_of: subset must have exactly 3 elements");
    std::array<int, 6> mu;
    mu.fill(1);
    for (int i : subset) {
        if (i < 0 || i >= 6) throw Error("mu_of: index out of range");
        if (mu[i] == -1) throw Error("mu_of: repeated index");
        mu[i] = -1;
    }
    return mu;
}

bool is_I_binary(const HadamardMatrix& h, const std::vector<int>& subset, double tol) {
    if (h.dim() != 6) throw DimensionNotSix("is_I_binary: d = 6 only");
    const std::array<int, 6> mu = mu_of(subset);
    std::vector<Complex> v(6);
    for (int k = 0; k < 6; ++k) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < 6; ++j) prod *= unimodular_power(h.m(j, k), mu[j]);
        v[k] = prod;
    }
    return is_binary(std::move(v), tol);
}

std::vector<int> minus_one_rows(const HadamardMatrix& h, int dephase_row, int dephase_col,
                                double tol) {
    if (h.dim() != 6) throw DimensionNotSix("minus_one_rows: d = 6 only");
    const Matrix d = dephased_matrix(h.m, dephase_row, dephase_col);
    std::vector<int> rows;
    for (int r = 0; r < 6; ++r) {
        if (r == dephase_row) continue;
        for (int c = 0; c < 6; ++c) {
            if (std::abs(d(r, c) + 1.0) <= tol) {
                rows.push_back(r);
                break;
            }
        }
    }
    return rows;
}

}  // namespace mubcube
