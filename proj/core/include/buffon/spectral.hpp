#pragma once

#include <vector>

#include "buffon/complex.hpp"
#include "buffon/graph.hpp"
#include "buffon/linalg.hpp"

namespace buffon {

enum class BuffonVariant { EdgeBased, FaceBased };

// B = (I + D^-1 A) / 2: row-stochastic, entries 1/(2 d_i) on edges and 1/2 on
// the diagonal; similar to the symmetric (I + N)/2 with N the normalized
// adjacency, so the spectrum is real and sits in [0, 1].
struct BuffonOperator {
  int size = 0;
  Matrix matrix;
  std::vector<int> degrees;
  BuffonVariant variant = BuffonVariant::EdgeBased;
};

BuffonOperator buffon_matrix(const Graph& graph);

// Face-based transformation (4 B - I) / 3, defined on simplicial complexes
// only; throws NotSimplicial when complex has a non-triangle face.
BuffonOperator face_buffon_matrix(const BuffonOperator& op,
                                  const PolyhedralComplex& complex);

struct EigenGroup {
  double eigenvalue = 0.0;
  int multiplicity = 0;
  Matrix basis;  // size x multiplicity; right eigenvectors of B, orthonormal
                 // in the degree-weighted inner product
};

struct SpectralDecomposition {
  std::vector<EigenGroup> groups;  // descending eigenvalue
  double tolerance_used = 0.0;
};

// Dense symmetric eigensolve on the conjugate (I+N)/2, eigenvectors mapped
// back by D^{-1/2}, eigenvalues merged into groups at group_tol. Throws
// ToleranceAmbiguity when two adjacent groups sit closer than 10x group_tol.
SpectralDecomposition spectrum(const BuffonOperator& op, double group_tol = 1e-9);

// Second group: the largest eigenvalue below the top one.
const EigenGroup& subdominant_space(const SpectralDecomposition& decomp);

std::vector<int> multiplicities(const SpectralDecomposition& decomp);

}  // namespace buffon
