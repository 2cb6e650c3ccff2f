#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mubcube {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DimensionTooLarge : Error {
    using Error::Error;
};

struct DimensionNotSix : Error {
    using Error::Error;
};

struct NonFiniteEntry : Error {
    using Error::Error;
};

struct NoPrincipalEigenvector : Error {
    using Error::Error;
};

/// Two-tier tolerance policy: analytically constructed objects are held to
/// exact_tol, optimizer outputs to search_tol.
struct Tolerance {
    double exact_tol = 1e-9;
    double search_tol = 1e-6;

    Tolerance() = default;
    Tolerance(double exact, double search);
};

/// Largest entry modulus of a matrix (sup norm over entries).
double max_abs(const Matrix& m);

/// Worst deviation of any entry modulus from 1.
double unimodularity_residual(const Matrix& m);

bool finite_entries(const Matrix& m);

/// Hilbert-Schmidt inner product Tr(A* B), conjugate-linear in the first slot.
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Max-entry deviation of M*M from the identity.
double unitarity_residual(const Matrix& m);

bool is_unitary(const Matrix& m, double tol);

/// Checks self-adjointness, idempotency and unit trace, each at tol.
bool is_rank_one_projection(const Matrix& m, double tol);

/// Worst of the three rank-one projection residuals; useful for reports.
double projection_residual(const Matrix& m);

/// Multiplies v by a phase so its first entry of largest modulus is real
/// and positive. Leaves the zero vector untouched.
Vector phase_normalized(Vector v);

/// Unit vector v with P close to |v><v|, phase-normalized. Requires P to have
/// an eigenvalue within tol of 1; throws NoPrincipalEigenvector otherwise.
Vector principal_unit_eigenvector(const Matrix& p, double tol);

/// Deterministic 64-bit stream used wherever the library needs seeded
/// randomness. Bit-stable across platforms, unlike std distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1).
    double next_double();

    /// Uniform angle in [0, 2*pi).
    double next_angle();

    /// Unimodular complex number with uniform phase.
    Complex next_phase();
};

/// Stable per-run seed derivation for experiment fan-out.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace mubcube
