#pragma once

#include <vector>

#include "buffon/complex.hpp"
#include "buffon/graph.hpp"
#include "buffon/spectral.hpp"

namespace buffon {

struct AutomorphismGroup {
  long long order = 0;
  std::vector<std::vector<int>> generators;  // a minimal-ish generating set
  bool is_vertex_transitive = false;
};

// Exhaustive backtracking over adjacency-preserving vertex maps with
// degree/distance-profile pruning. Deterministic; throws
// SearchBudgetExceeded past node_budget search nodes.
AutomorphismGroup automorphisms(const Graph& graph, long long node_budget = 50'000'000);

// Closure of a generator set by repeated multiplication (desk-scale orders).
std::vector<std::vector<int>> generated_group(const std::vector<std::vector<int>>& generators,
                                              int n);

bool multiplicity_pattern(const SpectralDecomposition& decomp,
                          const std::vector<int>& expected);

struct SubdominantSymmetryVerdict {
  long long automorphism_order = 0;
  int subdominant_multiplicity = 0;
  bool multiplicity_is_3 = false;
  // order >= 24 and divisible by a Platonic rotation-group order (12, 24, 60)
  bool platonic_order = false;
};

SubdominantSymmetryVerdict subdominant_multiplicity_check(const PolyhedralComplex& complex);

}  // namespace buffon
