#include "buffon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "buffon/errors.hpp"
#include "buffon/spectral.hpp"

namespace buffon {

CoordinateState buffon_step(const CoordinateState& state, const Graph& graph) {
  const int n = graph.vertex_count();
  if (static_cast<int>(state.coords.rows()) != n)
    throw Error(ErrorKind::ValidationError, "coordinate count does not match graph");
  const std::size_t d = state.coords.cols();
  CoordinateState next;
  next.coords = Matrix(n, d);
  for (int i = 0; i < n; ++i) {
    const double w = 0.5 / graph.degree(i);
    for (std::size_t c = 0; c < d; ++c) {
      double acc = 0.5 * state.coords(i, c);
      for (int j : graph.neighbors(i)) acc += w * state.coords(j, c);
      next.coords(i, c) = acc;
    }
  }
  next.step = state.step + 1;
  next.last_shape_change = state.last_shape_change;
  next.collapse_dim_estimate = state.collapse_dim_estimate;
  return next;
}

Matrix normalize_shape(const Matrix& coords, const Graph& graph) {
  const std::size_t n = coords.rows(), d = coords.cols();
  std::vector<double> centroid(d, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double deg = graph.degree(static_cast<int>(i));
    for (std::size_t c = 0; c < d; ++c) centroid[c] += deg * coords(i, c);
    total += deg;
  }
  Matrix out(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) out(i, c) = coords(i, c) - centroid[c] / total;
  const double f = out.frobenius_norm();
  if (f < 1e-300)
    throw Error(ErrorKind::ValidationError,
                "shape has collapsed to the centroid; nothing to normalize");
  return out * (1.0 / f);
}

IterateResult iterate_to_limit(const Matrix& coords, const Graph& graph,
                               const IterateOptions& options) {
  if (options.shape_tol <= 0.0)
    throw Error(ErrorKind::ValidationError, "shape tolerance must be positive");
  CoordinateState state;
  state.coords = normalize_shape(coords, graph);

  double previous_change = -1.0;
  for (long long step = 1; step <= options.max_steps; ++step) {
    CoordinateState advanced = buffon_step(state, graph);
    Matrix normalized = normalize_shape(advanced.coords, graph);
    const double change = aligned_distance(normalized, state.coords);
    state.coords = std::move(normalized);
    state.step = step;
    previous_change = state.last_shape_change;
    state.last_shape_change = change;
    if (change < options.shape_tol) {
      IterateResult result;
      result.steps_used = step;
      state.collapse_dim_estimate = numerical_rank(state.coords, options.collapse_tol);
      result.collapse_dim = state.collapse_dim_estimate;
      result.limit = std::move(state);
      return result;
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "no fixed shape after " + std::to_string(options.max_steps) +
                  " steps; last shape changes " + std::to_string(previous_change) +
                  " and " + std::to_string(state.last_shape_change) +
                  " (oscillation indicates tied leading eigenvalue groups)");
}

PolygonSpectrum polygon_spectrum(int n) {
  if (n < 3) throw Error(ErrorKind::ValidationError, "polygon needs n >= 3");
  PolygonSpectrum out;
  out.values.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double a = 2.0 * std::numbers::pi * j / n;
    out.values.emplace_back(0.5 + 0.5 * std::cos(a), 0.5 * std::sin(a));
  }
  out.by_modulus.resize(n);
  for (int j = 0; j < n; ++j) out.by_modulus[j] = j;
  std::stable_sort(out.by_modulus.begin(), out.by_modulus.end(), [&](int a, int b) {
    return std::abs(out.values[a]) > std::abs(out.values[b]);
  });
  out.subdominant_pair = {1, n - 1};
  return out;
}

std::pair<std::vector<double>, std::vector<double>> polygram_eigenspace(int n, int k) {
  if (n < 3) throw Error(ErrorKind::ValidationError, "polygon needs n >= 3");
  if (k < 1 || k > (n - 1) / 2)
    throw Error(ErrorKind::ValidationError,
                "polygram index k must satisfy 1 <= k <= (n-1)/2");
  std::vector<double> c(n), s(n);
  for (int j = 0; j < n; ++j) {
    const double a = 2.0 * std::numbers::pi * k * j / n;
    c[j] = std::cos(a);
    s[j] = std::sin(a);
  }
  return {std::move(c), std::move(s)};
}

std::uint64_t DeterministicRng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double DeterministicRng::symmetric() {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0,1)
  return 2.0 * u - 1.0;
}

Matrix perturbed(const Matrix& coords, double epsilon, DeterministicRng& rng) {
  Matrix out = coords;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) += epsilon * rng.symmetric();
  return out;
}

}  // namespace buffon
