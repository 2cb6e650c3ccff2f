#include "mubcube/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mubcube {

NotUnimodular::NotUnimodular(int r, int c, double res)
    : Error("entry (" + std::to_string(r) + "," + std::to_string(c) +
            ") is not unimodular, deviation " + std::to_string(res)),
      row(r),
      col(c),
      residual(res) {}

NotOrthogonal::NotOrthogonal(int a_, int b_, bool cols, double res)
    : Error(std::string(cols ? "columns" : "rows") + " (" + std::to_string(a_) + "," +
            std::to_string(b_) + ") are not orthogonal, |inner| = " + std::to_string(res)),
      a(a_),
      b(b_),
      columns(cols),
      residual(res) {}

double hadamard_residual(const Matrix& m) {
    const int d = static_cast<int>(m.rows());
    double worst = unimodularity_residual(m);
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            worst = std::max(worst, std::abs(m.col(a).dot(m.col(b))) / d);
            worst = std::max(worst, std::abs(m.row(a).dot(m.row(b))) / d);
        }
    }
    return worst;
}

HadamardMatrix validate_hadamard(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("validate_hadamard: matrix not square");
    if (!finite_entries(m)) throw NonFiniteEntry("validate_hadamard: non-finite entry");
    const int d = static_cast<int>(m.rows());
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            const double dev = std::abs(std::abs(m(j, k)) - 1.0);
            if (dev > tol) throw NotUnimodular(j, k, dev);
        }
    }
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            const double col_ip = std::abs(m.col(a).dot(m.col(b)));
            if (col_ip > d * tol) throw NotOrthogonal(a, b, true, col_ip);
            const double row_ip = std::abs(m.row(a).dot(m.row(b)));
            if (row_ip > d * tol) throw NotOrthogonal(a, b, false, row_ip);
        }
    }
    return HadamardMatrix{m, tol};
}

HaagerupTensor haagerup(const HadamardMatrix& h) {
    const int d = h.dim();
    HaagerupTensor t;
    t.dim = d;
    t.values.resize(static_cast<std::size_t>(d) * d * d * d);
    std::size_t idx = 0;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int r = 0; r < d; ++r)
                    t.values[idx++] =
                        h.m(j, k) * std::conj(h.m(l, k)) * h.m(l, r) * std::conj(h.m(j, r));
    return t;
}

double max_difference(const HaagerupTensor& a, const HaagerupTensor& b) {
    if (a.dim != b.dim) throw DimensionMismatch("haagerup tensors have different dimension");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

Matrix dephased_matrix(const Matrix& m, int row, int col) {
    const int d = static_cast<int>(m.rows());
    if (row < 0 || row >= d || col < 0 || col >= d) throw Error("dephase: index out of range");
    Matrix out = m;
    for (int c = 0; c < d; ++c) out.col(c) /= m(row, c);
    for (int r = 0; r < d; ++r) out.row(r) /= out(r, col);
    return out;
}

HadamardMatrix dephase(const HadamardMatrix& h, int row, int col) {
    // Diagonal rescaling by unimodular factors preserves both invariants.
    return HadamardMatrix{dephased_matrix(h.m, row, col), h.tol_used};
}

Matrix EquivalenceWitness::apply(const Matrix& h2) const {
    const Matrix base = adjoint_branch ? Matrix(h2.adjoint()) : h2;
    const int d = static_cast<int>(base.rows());
    Matrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out(i, j) = d1(row_perm[i]) * base(row_perm[i], col_perm[j]) * d2(col_perm[j]);
    return out;
}

namespace {

std::optional<EquivalenceWitness> search_direct(const Matrix& h1, const Matrix& h2, double tol) {
    const int d = static_cast<int>(h1.rows());
    const Matrix h1d = dephased_matrix(h1, 0, 0);

    std::vector<int> sigma(d), tau(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            // Dephased entry of the permuted H2 at (i,j):
            //   M[i][j] * M[0][0] / (M[i][0] * M[0][j]),  M[i][j] = H2(sigma_i, tau_j).
            const Complex m00 = h2(sigma[0], tau[0]);
            bool match = true;
            for (int i = 1; i < d && match; ++i) {
                const Complex mi0 = h2(sigma[i], tau[0]);
                for (int j = 1; j < d; ++j) {
                    const Complex v = h2(sigma[i], tau[j]) * m00 / (mi0 * h2(sigma[0], tau[j]));
                    if (std::abs(v - h1d(i, j)) > tol) {
                        match = false;
                        break;
                    }
                }
            }
            if (match) {
                EquivalenceWitness w;
                w.row_perm = sigma;
                w.col_perm = tau;
                w.d1 = Vector(d);
                w.d2 = Vector(d);
                // H1 = Da * (perm H2) * Db with
                //   Da[i] = (H1(i,0)/H1(0,0)) * (M(0,0)/M(i,0)),
                //   Db[j] = H1(0,j) / M(0,j);
                // stored re-indexed so that apply() uses d1[sigma_i], d2[tau_j].
                for (int i = 0; i < d; ++i)
                    w.d1(sigma[i]) = (h1(i, 0) / h1(0, 0)) * (m00 / h2(sigma[i], tau[0]));
                for (int j = 0; j < d; ++j) w.d2(tau[j]) = h1(0, j) / h2(sigma[0], tau[j]);
                return w;
            }
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace

std::optional<EquivalenceWitness> equivalent(const HadamardMatrix& h1, const HadamardMatrix& h2,
                                             double tol) {
    if (h1.dim() != h2.dim()) throw DimensionMismatch("equivalent: dimensions differ");
    if (h1.dim() > 6) throw DimensionTooLarge("equivalent: exhaustive search is bounded at d = 6");
    return search_direct(h1.m, h2.m, tol);
}

std::optional<EquivalenceWitness> adjoint_equivalent(const HadamardMatrix& h1,
                                                     const HadamardMatrix& h2, double tol) {
    if (auto w = equivalent(h1, h2, tol)) return w;
    if (h1.dim() > 6) throw DimensionTooLarge("adjoint_equivalent: bounded at d = 6");
    if (auto w = search_direct(h1.m, h2.m.adjoint(), tol)) {
        w->adjoint_branch = true;
        return w;
    }
    return std::nullopt;
}

}  // namespace mubcube
