#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "buffon/conway.hpp"
#include "buffon/dynamics.hpp"
#include "buffon/errors.hpp"
#include "buffon/seeds.hpp"
#include "buffon/spectral.hpp"
#include "test_util.hpp"

using namespace buffon;

namespace {

Matrix random_coords(int n, int d, DeterministicRng& rng) {
  Matrix m(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = rng.symmetric();
  return m;
}

double affine_regular_residual(const Matrix& coords, int n) {
  // r_{i-1} + r_{i+1} = 2 cos(2 pi / n) r_i after centering
  const double c = 2.0 * std::cos(2.0 * std::numbers::pi / n);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < coords.cols(); ++k) {
      const double lhs =
          coords((i + n - 1) % n, k) + coords((i + 1) % n, k) - c * coords(i, k);
      worst = std::max(worst, std::abs(lhs));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("square on C4 maps to the half-area midpoint square") {
  const Graph c4 = cycle_graph(4);
  CoordinateState state;
  state.coords = Matrix(4, 2);
  const double pts[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (int i = 0; i < 4; ++i) {
    state.coords(i, 0) = pts[i][0];
    state.coords(i, 1) = pts[i][1];
  }
  const auto next = buffon_step(state, c4);
  // each vertex moves to the average of the two incident edge midpoints,
  // which for the square halves the circumradius-squared (area factor 1/2)
  double area_ratio = 0.0;
  for (int i = 0; i < 4; ++i)
    area_ratio += next.coords(i, 0) * next.coords(i, 0) +
                  next.coords(i, 1) * next.coords(i, 1);
  CHECK(area_ratio == doctest::Approx(2.0).epsilon(1e-14));  // was 4
  // center preserved
  double cx = 0.0, cy = 0.0;
  for (int i = 0; i < 4; ++i) {
    cx += next.coords(i, 0);
    cy += next.coords(i, 1);
  }
  CHECK(std::abs(cx) < 1e-15);
  CHECK(std::abs(cy) < 1e-15);
}

TEST_CASE("affine equivariance: step(A r + b) = A step(r) + b") {
  DeterministicRng rng(42);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + static_cast<int>(rng.next() % 20);
    const auto g = testutil::random_connected_graph(n, static_cast<int>(rng.next() % 30), rng);
    const Matrix r = random_coords(n, 3, rng);
    Matrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = rng.symmetric() + (i == j ? 1.5 : 0.0);
    const Vec3 b{rng.symmetric(), rng.symmetric(), rng.symmetric()};

    Matrix mapped = r * a.transposed();
    for (std::size_t i = 0; i < mapped.rows(); ++i) {
      mapped(i, 0) += b.x;
      mapped(i, 1) += b.y;
      mapped(i, 2) += b.z;
    }
    const Matrix lhs = buffon_step({mapped, 0, 0, 0}, g).coords;
    Matrix rhs = buffon_step({r, 0, 0, 0}, g).coords * a.transposed();
    for (std::size_t i = 0; i < rhs.rows(); ++i) {
      rhs(i, 0) += b.x;
      rhs(i, 1) += b.y;
      rhs(i, 2) += b.z;
    }
    CHECK((lhs - rhs).max_abs() < 1e-12);
  }
}

TEST_CASE("degree-weighted centroid is invariant under the step") {
  DeterministicRng rng(4242);
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng.next() % 15);
    const auto g = testutil::random_connected_graph(n, static_cast<int>(rng.next() % 20), rng);
    const Matrix r = random_coords(n, 3, rng);
    const Matrix r2 = buffon_step({r, 0, 0, 0}, g).coords;
    for (int k = 0; k < 3; ++k) {
      double before = 0.0, after = 0.0;
      for (int i = 0; i < n; ++i) {
        before += g.degree(i) * r(i, k);
        after += g.degree(i) * r2(i, k);
      }
      CHECK(std::abs(before - after) < 1e-12 * (1.0 + std::abs(before)));
    }
  }
}

TEST_CASE("coords inside the subdominant eigenspace contract by exactly lambda_1") {
  const auto c = seed_complex("icosahedron");
  const Graph g = c.skeleton();
  const auto decomp = spectrum(buffon_matrix(g));
  const auto& sub = subdominant_space(decomp);
  const Matrix r = sub.basis;
  const Matrix r2 = buffon_step({r, 0, 0, 0}, g).coords;
  CHECK(std::abs(r2.frobenius_norm() / r.frobenius_norm() - sub.eigenvalue) < 1e-10);
  // regular icosahedron reference coordinates live in that eigenspace too
  const auto solid = seed_geometry("icosahedron");
  const Matrix s2 = buffon_step({solid.coords, 0, 0, 0}, g).coords;
  CHECK((s2 - solid.coords * sub.eigenvalue).max_abs() < 1e-10);
}

TEST_CASE("random pentagon converges to an affine regular pentagon") {
  DeterministicRng rng(5);
  const Graph c5 = cycle_graph(5);
  for (int t = 0; t < 10; ++t) {
    const Matrix start = random_coords(5, 2, rng);
    const auto result = iterate_to_limit(start, c5);
    CHECK(result.collapse_dim == 2);
    CHECK(affine_regular_residual(result.limit.coords, 5) < 1e-8);
  }
}

TEST_CASE("perturbed prism(6) collapses to the plane") {
  DeterministicRng rng(66);
  const auto solid = seed_geometry("prism(6)");
  const Graph g = solid.complex.skeleton();
  const Matrix start = perturbed(solid.coords, 0.05, rng);
  const auto result = iterate_to_limit(start, g);
  CHECK(result.collapse_dim == 2);
}

TEST_CASE("perturbed pentakis dodecahedron stays 3D and spans the subdominant space") {
  DeterministicRng rng(314);
  const auto solid = catalan_pentakis_dodecahedron();
  const Graph g = solid.complex.skeleton();
  const auto decomp = spectrum(buffon_matrix(g));
  const auto& sub = subdominant_space(decomp);
  const Matrix start = perturbed(solid.coords, 0.08, rng);
  const auto result = iterate_to_limit(start, g);
  CHECK(result.collapse_dim == 3);
  CHECK(testutil::column_space_gap(result.limit.coords, sub.basis) < 1e-6);
}

TEST_CASE("iterate reports NoConvergence when the step budget is too small") {
  DeterministicRng rng(8);
  const Graph c12 = cycle_graph(12);
  const Matrix start = random_coords(12, 2, rng);
  IterateOptions opts;
  opts.max_steps = 3;
  CHECK_THROWS_AS(iterate_to_limit(start, c12, opts), Error);
  try {
    iterate_to_limit(start, c12, opts);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("polygon spectrum closed form") {
  const auto s4 = polygon_spectrum(4);
  REQUIRE(s4.values.size() == 4);
  CHECK(std::abs(s4.values[0] - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(s4.values[1] - std::complex<double>(0.5, 0.5)) < 1e-15);
  CHECK(std::abs(s4.values[2] - std::complex<double>(0, 0)) < 1e-15);
  CHECK(std::abs(s4.values[3] - std::complex<double>(0.5, -0.5)) < 1e-15);
  CHECK(s4.by_modulus[0] == 0);
  CHECK(s4.subdominant_pair.first == 1);
  CHECK(s4.subdominant_pair.second == 3);

  const auto s3 = polygon_spectrum(3);
  CHECK(std::abs(s3.values[1] - std::complex<double>(0.25, std::sqrt(3.0) / 4.0)) < 1e-15);

  const auto s5 = polygon_spectrum(5);
  const auto& sub = s5.values[s5.subdominant_pair.first];
  CHECK(std::abs(sub - std::complex<double>(0.5 + 0.5 * std::cos(2 * std::numbers::pi / 5),
                                            0.5 * std::sin(2 * std::numbers::pi / 5))) <
        1e-15);
  // moduli ordering: subdominant pair right after the top eigenvalue
  CHECK(s5.by_modulus[0] == 0);
  const int m1 = s5.by_modulus[1], m2 = s5.by_modulus[2];
  CHECK(((m1 == 1 && m2 == 4) || (m1 == 4 && m2 == 1)));
}

TEST_CASE("polygram vectors span a rotation block of the edge-midpoint matrix") {
  for (int n : {5, 7, 12}) {
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      const auto [cv, sv] = polygram_eigenspace(n, k);
      const double ang = 2.0 * std::numbers::pi * k / n;
      // edge-midpoint rule: (B v)_j = (v_j + v_{j+1}) / 2
      for (int j = 0; j < n; ++j) {
        const double bc = 0.5 * (cv[j] + cv[(j + 1) % n]);
        const double bs = 0.5 * (sv[j] + sv[(j + 1) % n]);
        const double expect_c =
            (0.5 + 0.5 * std::cos(ang)) * cv[j] - 0.5 * std::sin(ang) * sv[j];
        const double expect_s =
            (0.5 + 0.5 * std::cos(ang)) * sv[j] + 0.5 * std::sin(ang) * cv[j];
        CHECK(std::abs(bc - expect_c) < 1e-12);
        CHECK(std::abs(bs - expect_s) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(polygram_eigenspace(5, 3), Error);
}

TEST_CASE("deterministic rng replays exactly") {
  DeterministicRng a(123), b(123);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}
