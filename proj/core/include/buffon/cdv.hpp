#pragma once

#include "buffon/complex.hpp"
#include "buffon/linalg.hpp"
#include "buffon/realization.hpp"

namespace buffon {

// Symmetric matrix with negative entries exactly on edges, kernel of
// dimension 3 containing the coordinate functions of the source realization,
// and exactly one negative eigenvalue.
struct CdVMatrix {
  int size = 0;
  Matrix matrix;
  Matrix kernel_basis;  // size x 3
  int negative_count = 0;
};

// Polar construction: for each face solve (w_f, u_i) = 1 over its vertices
// (FaceNotPlanar above 1e-8), set M_ij from w_f - w_g = M_ij (u_i x u_j) with
// the sign fixed negative, and M_ii from sum_j M_ij u_j = -M_ii u_i. The
// realization must be convex with the origin strictly inside.
CdVMatrix cdv_matrix(const Realization& realization, const PolyhedralComplex& complex);

}  // namespace buffon
