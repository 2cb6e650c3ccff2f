#pragma once

#include "mubcube/hadamard.hpp"
#include "mubcube/mub.hpp"
#include "mubcube/numerics.hpp"

#include <optional>

namespace mubcube {

/// Primitive cube root of unity used throughout the d = 6 families.
inline const Complex kOmega{-0.5, 0.8660254037844386467637231707529362};

/// Unimodular parameter pair (x, y) of the order-6 Fourier families.
struct FourierParams {
    Complex x{1.0, 0.0};
    Complex y{1.0, 0.0};

    FourierParams() = default;
    FourierParams(Complex x_, Complex y_);

    static FourierParams from_turns(double x_turns, double y_turns);
};

/// The explicit 6x6 transposed Fourier family member; rows carry the omega
/// pattern, the right half carries x, y and the sign flip.
Matrix fourier_transposed_matrix(const FourierParams& p);

HadamardMatrix fourier_transposed(const FourierParams& p);

/// Fourier family F(x,y): the transpose of the family above.
HadamardMatrix fourier(const FourierParams& p);

struct TwoCirculantBlocks {
    Matrix a, b, c, d;
};

/// Partitions a 6x6 matrix into four 3x3 blocks and accepts when each block
/// is circulant (every row the right-shift of the previous one).
std::optional<TwoCirculantBlocks> detect_two_circulant(const HadamardMatrix& h, double tol);

/// Literal pattern test for the 2-circulant form with first row (a,b,c,d,e,f),
/// conjugated lower-left block and negated-conjugated lower-right block.
bool detect_szollosi_form(const HadamardMatrix& h, double tol);

/// Equivalence-class membership probes: exhaustive permutation search with
/// the dephasing freedom removed, exact up to tol. The Szollosi probe
/// returns the literal pattern representative it recovered.
bool transposed_fourier_equivalent(const HadamardMatrix& h, double tol);
bool fourier_equivalent(const HadamardMatrix& h, double tol);
std::optional<Matrix> szollosi_equivalent(const HadamardMatrix& h, double tol);

struct ZaunerBuild {
    MubSystem triplet;
    bool szollosi_transition = false;
};

/// Validates (I, F1/sqrt(6), F2/sqrt(6)) as an MUB triplet at tol and reports
/// whether the 2-3 transition matrix sqrt(6) X2* X3 has the literal Szollosi
/// form. F1, F2 are the caller-assembled unimodular family members.
ZaunerBuild zauner_triplet(const Matrix& f1, const Matrix& f2, double tol);

/// The 2-circulant reference with A = B = C = circ(omega,1,1), D = -A;
/// validated and checked to be equivalent to F(1,1).
HadamardMatrix exceptional_reference();

}  // namespace mubcube
