#pragma once

#include "mubcube/numerics.hpp"

#include <optional>
#include <vector>

namespace mubcube {

struct NotUnimodular : Error {
    int row = -1, col = -1;
    double residual = 0.0;
    NotUnimodular(int r, int c, double res);
};

struct NotOrthogonal : Error {
    int a = -1, b = -1;
    bool columns = true;
    double residual = 0.0;
    NotOrthogonal(int a_, int b_, bool cols, double res);
};

/// d x d matrix with unimodular entries and pairwise orthogonal rows and
/// columns, validated at construction time.
struct HadamardMatrix {
    Matrix m;
    double tol_used = 0.0;

    int dim() const { return static_cast<int>(m.rows()); }
};

/// Worst violation over both invariants: entry-modulus deviation from 1 and
/// |<col_j,col_k>|/d (resp. rows) for distinct indices.
double hadamard_residual(const Matrix& m);

/// Wraps m as a HadamardMatrix, throwing NotUnimodular or NotOrthogonal with
/// the offending indices. Orthogonality is accepted up to d*tol.
HadamardMatrix validate_hadamard(const Matrix& m, double tol);

/// Haagerup invariants g_{j,k,l,r} stored densely, |g| = 1 for unimodular H.
/// Anchored to the projection form: g_{j,k,l,r} = d^2 Tr(P_j Q_k P_l Q_r),
/// which in matrix entries reads h_{j,k} conj(h_{l,k}) h_{l,r} conj(h_{j,r}).
struct HaagerupTensor {
    int dim = 0;
    std::vector<Complex> values;

    Complex at(int j, int k, int l, int r) const {
        const int d = dim;
        return values[static_cast<std::size_t>(((j * d + k) * d + l) * d + r)];
    }
};

HaagerupTensor haagerup(const HadamardMatrix& h);

/// Largest entrywise modulus of difference between two tensors.
double max_difference(const HaagerupTensor& a, const HaagerupTensor& b);

/// Diagonal rescaling making the chosen row and column all ones. Columns are
/// scaled first by the entries of `row`, then rows by the updated `col`.
Matrix dephased_matrix(const Matrix& m, int row, int col);

HadamardMatrix dephase(const HadamardMatrix& h, int row, int col);

/// Witness for H1 = P1 D1 H2 D2 P2 (or the same with H2* when adjoint_branch).
/// row_perm/col_perm encode the permutations; d1/d2 the unimodular diagonals.
struct EquivalenceWitness {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    Vector d1;
    Vector d2;
    bool adjoint_branch = false;

    /// Reconstructs P1 D1 H2' D2 P2 where H2' is h2 or its conjugate
    /// transpose depending on the branch.
    Matrix apply(const Matrix& h2) const;
};

/// Exhaustive equivalence test per the dephased-comparison scheme: for every
/// pair of row/column permutations of H2, dephase both sides at (0,0) and
/// compare entrywise. Only meaningful for d <= 6 (throws DimensionTooLarge).
std::optional<EquivalenceWitness> equivalent(const HadamardMatrix& h1, const HadamardMatrix& h2,
                                             double tol);

/// Tests against H2 and against its conjugate transpose; the witness records
/// which branch matched.
std::optional<EquivalenceWitness> adjoint_equivalent(const HadamardMatrix& h1,
                                                     const HadamardMatrix& h2, double tol);

}  // namespace mubcube
