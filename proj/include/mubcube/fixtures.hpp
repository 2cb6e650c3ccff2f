#pragma once

#include "mubcube/families.hpp"
#include "mubcube/mub.hpp"
#include "mubcube/numerics.hpp"

#include <utility>

namespace mubcube::fixtures {

/// (I, F2/sqrt(2), T2/sqrt(2)) with T2 = [[1,1],[i,-i]]; the complete d = 2
/// system restricted to a triplet.
MubSystem standard_triplet_d2();

/// (I, F3/sqrt(3), D F3/sqrt(3)) with D = diag(1, w, w).
MubSystem standard_triplet_d3();

/// Tensor product of the d = 2 and d = 3 standard triplets; an analytic
/// d = 6 MUB triplet whose cube consists of 24th roots of unity.
MubSystem tensor_triplet_d6();

/// Analytic Zauner pair: F1 = F(1,1) and F2 = diag(1,w,w,i,iw,iw) F(1,1).
/// (I, F1/sqrt(6), F2/sqrt(6)) is the tensor triplet with re-ordered basis
/// vectors, so it validates exactly.
std::pair<Matrix, Matrix> zauner_pair_reference();

/// A literal member of the 2-circulant conjugate-pattern family, recovered
/// deterministically from F^T(w,w) where the two families intersect.
Matrix szollosi_instance();

}  // namespace mubcube::fixtures
