#include "mubcube/mub.hpp"

#include <cmath>

namespace mubcube {

NotUnitary::NotUnitary(int idx, double res)
    : Error("basis " + std::to_string(idx) + " is not unitary, residual " + std::to_string(res)),
      basis_index(idx),
      residual(res) {}

NotUnbiased::NotUnbiased(int a, int b, double res)
    : Error("bases (" + std::to_string(a) + "," + std::to_string(b) +
            ") are not unbiased, worst deviation " + std::to_string(res)),
      basis_a(a),
      basis_b(b),
      residual(res) {}

double unbiasedness_residual(const Matrix& x, const Matrix& y) {
    const double target = 1.0 / std::sqrt(static_cast<double>(x.rows()));
    const Matrix ip = x.adjoint() * y;
    double worst = 0.0;
    for (Eigen::Index j = 0; j < ip.rows(); ++j)
        for (Eigen::Index k = 0; k < ip.cols(); ++k)
            worst = std::max(worst, std::abs(std::abs(ip(j, k)) - target));
    return worst;
}

MubSystem validate_mub(const std::vector<Matrix>& bases, double tol) {
    if (bases.empty()) throw Error("validate_mub: no bases given");
    const int d = static_cast<int>(bases.front().rows());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i].rows() != d || bases[i].cols() != d)
            throw DimensionMismatch("validate_mub: basis " + std::to_string(i) +
                                    " has mismatched shape");
        const double res = unitarity_residual(bases[i]);
        if (res > tol) throw NotUnitary(static_cast<int>(i), res);
    }
    for (std::size_t a = 0; a < bases.size(); ++a) {
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            const double res = unbiasedness_residual(bases[a], bases[b]);
            if (res > tol) throw NotUnbiased(static_cast<int>(a), static_cast<int>(b), res);
        }
    }
    MubSystem sys;
    sys.dim = d;
    sys.tol_used = tol;
    sys.bases.reserve(bases.size());
    for (const auto& b : bases) sys.bases.push_back(Basis{b});
    return sys;
}

HadamardMatrix transition(const Basis& x, const Basis& y, double hadamard_tol) {
    if (x.dim() != y.dim()) throw DimensionMismatch("transition: dimensions differ");
    const double root_d = std::sqrt(static_cast<double>(x.dim()));
    return validate_hadamard(root_d * (x.u.adjoint() * y.u), hadamard_tol);
}

namespace {

// Re-phases the pair so that <f'_j, e_1> = <e'_k, f'_1> = 1/sqrt(d) and
// returns the re-phased basis matrices together with their inner-product
// matrix <e'_j, f'_k>.
struct RephasedPair {
    Matrix x, y, inner;
};

RephasedPair rephase(const BasisPair& p) {
    const int d = p.first.dim();
    const double root_d = std::sqrt(static_cast<double>(d));
    Matrix h = p.first.u.adjoint() * p.second.u;

    Vector alpha(d);
    for (int j = 0; j < d; ++j) alpha(j) = root_d * std::conj(h(0, j));
    Matrix y = p.second.u * alpha.asDiagonal();
    h = h * alpha.asDiagonal();

    Vector beta(d);
    for (int k = 0; k < d; ++k) beta(k) = root_d * h(k, 0);
    Matrix x = p.first.u * beta.asDiagonal();
    h = beta.conjugate().asDiagonal() * h;

    return {std::move(x), std::move(y), std::move(h)};
}

}  // namespace

std::optional<Matrix> directly_equivalent_pairs(const BasisPair& p1, const BasisPair& p2,
                                                double tol) {
    if (p1.first.dim() != p2.first.dim())
        throw DimensionMismatch("directly_equivalent_pairs: dimensions differ");
    const int d = p1.first.dim();
    const double root_d = std::sqrt(static_cast<double>(d));

    const RephasedPair a = rephase(p1);
    const RephasedPair b = rephase(p2);

    // Entrywise comparison of the two transition Hadamard matrices.
    if (max_abs(Matrix(root_d * (a.inner - b.inner))) > tol) return std::nullopt;

    Matrix u = b.x * a.x.adjoint();
    if (max_abs(Matrix(u * a.y - b.y)) > 10.0 * tol) return std::nullopt;
    return u;
}

std::optional<EquivalenceWitness> permutationally_equivalent_pairs(const BasisPair& p1,
                                                                   const BasisPair& p2,
                                                                   double tol) {
    if (p1.first.dim() > 6)
        throw DimensionTooLarge("permutationally_equivalent_pairs: bounded at d = 6");
    const HadamardMatrix h1 = transition(p1.first, p1.second, 10.0 * tol);
    const HadamardMatrix h2 = transition(p2.first, p2.second, 10.0 * tol);
    return adjoint_equivalent(h1, h2, tol);
}

bool directly_equivalent_triplets(const MubSystem& t1, const MubSystem& t2, double tol) {
    if (t1.size() != 3 || t2.size() != 3)
        throw Error("directly_equivalent_triplets: both systems must have three bases");
    if (t1.dim != t2.dim) throw DimensionMismatch("directly_equivalent_triplets: dims differ");
    const int d = t1.dim;
    const double root_d = std::sqrt(static_cast<double>(d));

    const auto transitions = [&](const MubSystem& t) {
        return std::array<Matrix, 3>{root_d * (t.bases[0].u.adjoint() * t.bases[1].u),
                                     root_d * (t.bases[1].u.adjoint() * t.bases[2].u),
                                     root_d * (t.bases[2].u.adjoint() * t.bases[0].u)};
    };
    const auto a = transitions(t1);
    const auto b = transitions(t2);

    const double bound = std::pow(static_cast<double>(d), 1.5) * tol;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const Complex c1 = a[0](j, k) * a[1](k, l) * a[2](l, j);
                const Complex c2 = b[0](j, k) * b[1](k, l) * b[2](l, j);
                if (std::abs(c1 - c2) > bound) return false;
            }
    return true;
}

}  // namespace mubcube
