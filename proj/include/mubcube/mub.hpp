#pragma once

#include "mubcube/hadamard.hpp"
#include "mubcube/numerics.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mubcube {

struct NotUnitary : Error {
    int basis_index = -1;
    double residual = 0.0;
    NotUnitary(int idx, double res);
};

struct NotUnbiased : Error {
    int basis_a = -1, basis_b = -1;
    double residual = 0.0;
    NotUnbiased(int a, int b, double res);
};

/// Orthonormal basis stored as the unitary matrix whose columns are the
/// basis vectors.
struct Basis {
    Matrix u;

    int dim() const { return static_cast<int>(u.rows()); }
};

using BasisPair = std::pair<Basis, Basis>;

/// Ordered list of pairwise unbiased orthonormal bases.
struct MubSystem {
    int dim = 0;
    std::vector<Basis> bases;
    double tol_used = 0.0;

    int size() const { return static_cast<int>(bases.size()); }
};

/// Max deviation of |<e_j, f_k>| from 1/sqrt(d) over all vector pairs.
double unbiasedness_residual(const Matrix& x, const Matrix& y);

/// Validates unitarity of every basis and unbiasedness of every pair, both
/// at tol; throws NotUnitary / NotUnbiased with the offending indices.
MubSystem validate_mub(const std::vector<Matrix>& bases, double tol);

/// Transition Hadamard matrix h_{j,k} = sqrt(d) <e_j, f_k>, validated at
/// hadamard_tol. Note transition(X,Y) = transition(Y,X)*.
HadamardMatrix transition(const Basis& x, const Basis& y, double hadamard_tol);

/// Constructive test for direct unitary equivalence of two unbiased pairs:
/// re-phases both pairs so first-row and first-column inner products become
/// 1/sqrt(d), compares the resulting transition matrices entrywise, and on
/// match returns the intertwining unitary U.
std::optional<Matrix> directly_equivalent_pairs(const BasisPair& p1, const BasisPair& p2,
                                                double tol);

/// Pairs are permutationally unitary equivalent iff their transition
/// matrices are Hadamard-equivalent directly or through the adjoint.
std::optional<EquivalenceWitness> permutationally_equivalent_pairs(const BasisPair& p1,
                                                                   const BasisPair& p2, double tol);

/// Triplets are directly unitary equivalent iff their Hadamard cubes agree
/// entrywise; compared within d^{3/2} * tol.
bool directly_equivalent_triplets(const MubSystem& t1, const MubSystem& t2, double tol);

}  // namespace mubcube
