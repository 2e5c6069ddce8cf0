#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "buffon/graph.hpp"
#include "buffon/linalg.hpp"

namespace buffon {

struct CoordinateState {
  Matrix coords;  // n x d, d = 2 or 3
  long long step = 0;
  double last_shape_change = 0.0;
  int collapse_dim_estimate = 0;
};

// One application of the vertex rule: each vertex moves to the centroid of
// the midpoints of its incident edges, i.e. coords <- B coords. Affine maps
// commute with it and the degree-weighted centroid is preserved.
CoordinateState buffon_step(const CoordinateState& state, const Graph& graph);

// Degree-weighted recentring followed by scaling to unit Frobenius norm.
Matrix normalize_shape(const Matrix& coords, const Graph& graph);

struct IterateOptions {
  long long max_steps = 100000;
  double shape_tol = 1e-10;
  double collapse_tol = 1e-8;
};

struct IterateResult {
  CoordinateState limit;
  int collapse_dim = 0;
  long long steps_used = 0;
};

// Repeats step + normalization until the normalized shape moves by less than
// shape_tol under optimal orthogonal alignment. Throws NoConvergence (with
// the last two shape changes, which distinguishes oscillation between tied
// eigenvalue groups from slow decay) when max_steps is hit.
IterateResult iterate_to_limit(const Matrix& coords, const Graph& graph,
                               const IterateOptions& options = {});

struct PolygonSpectrum {
  std::vector<std::complex<double>> values;  // 1/2 + 1/2 e^{2 pi i j / n}
  std::vector<int> by_modulus;               // indices, descending modulus
  std::pair<int, int> subdominant_pair;      // j = 1 and j = n-1
};

// Closed-form spectrum of the edge-midpoint polygon transformation.
PolygonSpectrum polygon_spectrum(int n);

// cos(2 pi k j / n) and sin(2 pi k j / n) sample vectors spanning the
// invariant plane of the eigenvalue pair 1/2 + 1/2 e^{+-2 pi i k / n}.
std::pair<std::vector<double>, std::vector<double>> polygram_eigenspace(int n, int k);

// Deterministic uniform doubles in [-1, 1); identical across platforms for a
// fixed seed (raw mt19937_64 draws, no distribution library involved).
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double symmetric();  // [-1, 1)
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

Matrix perturbed(const Matrix& coords, double epsilon, DeterministicRng& rng);

}  // namespace buffon
