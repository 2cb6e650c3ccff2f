#pragma once

#include "mubcube/mub.hpp"
#include "mubcube/numerics.hpp"

#include <string>
#include <vector>

namespace mubcube {

struct ZeroEntry : Error {
    int j = -1, k = -1, l = -1;
    ZeroEntry(int j_, int k_, int l_);
};

struct WeakConditionsFailed : Error {
    using Error::Error;
};

struct ProjectionDefect : Error {
    int index = -1;
    double residual = 0.0;
    ProjectionDefect(int idx, double res);
};

/// d x d x d array of unimodular complex numbers indexed (j,k,l).
struct HadamardCube {
    int dim = 0;
    std::vector<Complex> entries;

    static HadamardCube zeros(int d) {
        return HadamardCube{d, std::vector<Complex>(static_cast<std::size_t>(d) * d * d)};
    }

    Complex& at(int j, int k, int l) {
        return entries[static_cast<std::size_t>((j * dim + k)) * dim + l];
    }
    Complex at(int j, int k, int l) const {
        return entries[static_cast<std::size_t>((j * dim + k)) * dim + l];
    }
};

/// One verified condition. `residual` is the raw worst-case deviation and
/// `bound` the threshold it was compared against (already tol-scaled).
struct CheckResult {
    std::string name;
    bool pass = true;
    double residual = 0.0;
    double bound = 0.0;
    std::vector<int> witness;
};

struct CubeReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    const CheckResult* find(const std::string& name) const;
};

enum class CubeClass { Generic, Exceptional, Other };

struct CubeClassification {
    CubeClass tag = CubeClass::Other;
    int clusters = 0;
    int conjugate_pairs = 0;
};

std::string to_string(CubeClass c);

/// C_{j,k,l} = h_{j,k} h'_{k,l} h''_{l,j} from the transition matrices of
/// (X,Y), (Y,Z), (Z,X); equals sqrt(d^3) <e_j,f_k><f_k,g_l><g_l,e_j>.
HadamardCube build_cube(const MubSystem& triplet);

/// Same triple product from three arbitrary matrices. With independent
/// Hadamard matrices the result satisfies the slice/phase axioms but not
/// necessarily the piercing sums.
HadamardCube product_cube(const Matrix& h1, const Matrix& h2, const Matrix& h3);

/// Fixed orientation: axis 1 fixes j (rows k, cols l); axis 2 fixes k
/// (rows j, cols l); axis 3 fixes l (rows j, cols k).
Matrix slice(const HadamardCube& c, int axis, int index);

double max_entry_difference(const HadamardCube& a, const HadamardCube& b);

/// Full axiom audit:
///   unimodular       max | |C|-1 |                    <= tol
///   slices           hadamard_residual per slice      <= tol
///   phase-equiv      |2x2 ratio-of-ratios - 1|        <= tol
///   piercings        |sum - sqrt(d)|, all 3 axes      <= d*tol
CubeReport verify_axioms(const HadamardCube& c, double tol);

double haagerup_condition_residual(const HadamardCube& c, const std::array<int, 3>& t1,
                                   const std::array<int, 3>& t2);

/// Checkered 4-corner product equality over the sub-cuboid spanned by the
/// two index triples.
bool haagerup_condition(const HadamardCube& c, const std::array<int, 3>& t1,
                        const std::array<int, 3>& t2, double tol);

/// Weaker condition set that still forces a full Hadamard cube:
///   unimodular          <= tol
///   bottom-face         hadamard_residual of the l = d-1 slice   <= tol
///   slice-orthogonality |<S_l,S_l'>|/d^2 for l != l'             <= tol
///   haagerup            all index pairs                          <= 10*tol
///   horizontal sums     |sum - sqrt(d)| along j and k            <= d*tol
CubeReport verify_weak_conditions(const HadamardCube& c, double tol);

/// Division-only variant: slice inverse-orthogonality sum u_j/v_j = 0
/// (<= d*tol), Haagerup condition (<= 10*tol) and piercing sums along all
/// three axes (<= d*tol). Throws ZeroEntry when division is unsafe.
CubeReport verify_inverse_orthogonal(const HadamardCube& c, double tol);

/// The candidate third-basis projections R_l = (1/sqrt(d)) sum C_{j,k,l} Q_k P_j,
/// built against the standard first basis and the bottom-face second basis.
std::vector<Matrix> reconstruction_projections(const HadamardCube& c);

/// Rebuilds an MUB triplet whose cube reproduces C entrywise within
/// d^{3/2}*tol. First basis is standard, second comes from the bottom face,
/// third from the principal eigenvectors of the R_l.
MubSystem reconstruct_triplet(const HadamardCube& c, double tol);

/// d = 6 only. Exceptional when every entry sits within the clustering
/// tolerance of a 24th root of unity; generic when the entry multiset forms
/// exactly 72 clusters paired into 36 distinct conjugate pairs.
CubeClassification classify(const HadamardCube& c, double tol);

}  // namespace mubcube
