#pragma once

#include "mubcube/hadamard.hpp"
#include "mubcube/numerics.hpp"

#include <array>
#include <vector>

namespace mubcube {

struct OddLength : Error {
    using Error::Error;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct NoPairingFound : Error {
    using Error::Error;
};

/// Integer exponent vector gamma acting on unimodular vectors entrywise;
/// negative powers are taken as conjugation.
using ExponentVector = std::vector<int>;

/// z^n for unimodular z with conjugation for n < 0. |n| is expected small
/// (the invariants use +-1 and +-3; 8 is the sanity bound).
Complex unimodular_power(Complex z, int n);

/// g_H(gamma) = sum_k prod_j H(j,k)^gamma_j over the columns of H.
Complex g_of(const HadamardMatrix& h, const ExponentVector& gamma);

/// G_H(gamma) = |g_H(gamma)|^2.
double G_of(const HadamardMatrix& h, const ExponentVector& gamma);

/// S6-symmetrized sum over all permutations of gamma, computed over the
/// distinct arrangements of the multiset weighted by the stabilizer size.
double tilde_g(const HadamardMatrix& h, const ExponentVector& gamma);

/// Plain 720-term sum; kept as the cross-validation path for tilde_g.
double tilde_g_full_sum(const HadamardMatrix& h, const ExponentVector& gamma);

/// Per-matrix terms of the conjectured identity with
/// gamma1 = (1,1,1,-1,-1,-1) and gamma2 = (3,3,3,-3,-3,-3). The gamma2
/// factors are reported separately since only their product is conjectured
/// to vanish.
struct ConjectureReport {
    std::array<double, 3> gamma1_terms{};
    std::array<double, 3> gamma2_h{};
    std::array<double, 3> gamma2_hstar{};
    std::array<double, 3> gamma2_products{};
    double total = 0.0;
};

ConjectureReport conjecture_identity(const HadamardMatrix& h1, const HadamardMatrix& h2,
                                     const HadamardMatrix& h3);

extern const ExponentVector kGamma1;
extern const ExponentVector kGamma2;

/// Greedy antipodal pairing: repeatedly removes a pair minimizing |v_i+v_j|
/// while it stays within len*tol. Exact for unimodular vectors in d = 6.
bool is_binary(std::vector<Complex> v, double tol);

/// Power-sum criterion for unimodular 2n-vectors: sum v_i^k = 0 for odd
/// k <= n. Independent of the greedy path; used to cross-check it.
bool binary_power_sums_vanish(const std::vector<Complex>& v, double tol);

/// Given a unimodular 6-vector with sum 0 and x1 x3 x5 + x2 x4 x6 = 0,
/// reorders the even-position entries so each odd-position entry cancels
/// its partner. Returns partner[m] = index (1, 3 or 5) of the even entry
/// assigned to odd slot 2m. Preconditions are checked at tol; the output
/// cancellations hold within 10*tol.
std::array<int, 3> binary_pairing_from_triple_products(const std::array<Complex, 6>& x,
                                                       double tol);

/// Sign vector of a 3-subset of {0,...,5}: -1 on I, +1 off I.
std::array<int, 6> mu_of(const std::vector<int>& subset);

/// True when the column power vector (h_1^mu(I), ..., h_6^mu(I)) is binary.
bool is_I_binary(const HadamardMatrix& h, const std::vector<int>& subset, double tol);

/// Dephases H by (row, col) and lists the rows other than `row` containing
/// an entry within tol of -1.
std::vector<int> minus_one_rows(const HadamardMatrix& h, int dephase_row, int dephase_col,
                                double tol);

}  // namespace mubcube
