#include "mubcube/numerics.hpp"

#include <cmath>
#include <numbers>

namespace mubcube {

Tolerance::Tolerance(double exact, double search) : exact_tol(exact), search_tol(search) {
    if (!(0.0 < exact_tol && exact_tol <= search_tol && search_tol < 1.0)) {
        throw Error("tolerance policy requires 0 < exact_tol <= search_tol < 1");
    }
}

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double unimodularity_residual(const Matrix& m) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            worst = std::max(worst, std::abs(std::abs(m(j, k)) - 1.0));
    return worst;
}

bool finite_entries(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            if (!std::isfinite(m(j, k).real()) || !std::isfinite(m(j, k).imag())) return false;
    return true;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("hs_inner: operand shapes differ");
    }
    return (a.adjoint() * b).trace();
}

double unitarity_residual(const Matrix& m) {
    Matrix g = m.adjoint() * m;
    g.diagonal().array() -= 1.0;
    return max_abs(g);
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return unitarity_residual(m) <= tol;
}

double projection_residual(const Matrix& m) {
    const double herm = max_abs(Matrix(m - m.adjoint()));
    const double idem = max_abs(Matrix(m * m - m));
    const double tr = std::abs(m.trace() - Complex(1.0, 0.0));
    return std::max({herm, idem, tr});
}

bool is_rank_one_projection(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return projection_residual(m) <= tol;
}

Vector phase_normalized(Vector v) {
    Eigen::Index pick = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > best + 1e-14) {
            best = a;
            pick = i;
        }
    }
    if (pick < 0 || best == 0.0) return v;
    v *= std::conj(v(pick)) / best;
    v(pick) = Complex(std::abs(v(pick)), 0.0);  // scrub rounding in the pivot
    return v;
}

Vector principal_unit_eigenvector(const Matrix& p, double tol) {
    if (p.rows() != p.cols()) throw DimensionMismatch("principal_unit_eigenvector: not square");
    // The input is a rank-one projection up to noise; symmetrize before the
    // self-adjoint solve so the noise cannot produce complex eigenvalues.
    const Matrix sym = 0.5 * (p + p.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success) throw Error("principal_unit_eigenvector: eigensolver failed");
    const Eigen::Index top = p.rows() - 1;  // eigenvalues sorted ascending
    if (std::abs(es.eigenvalues()(top) - 1.0) > tol) {
        throw NoPrincipalEigenvector("principal_unit_eigenvector: no eigenvalue within tol of 1");
    }
    Vector v = es.eigenvectors().col(top);
    v.normalize();
    return phase_normalized(std::move(v));
}

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_angle() {
    return 2.0 * std::numbers::pi * next_double();
}

Complex SplitMix64::next_phase() {
    const double t = next_angle();
    return {std::cos(t), std::sin(t)};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0xA0761D6478BD642FULL * (index + 1)));
    mix.next();
    return mix.next();
}

}  // namespace mubcube
