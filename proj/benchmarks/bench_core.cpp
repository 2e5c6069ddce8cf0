#include <benchmark/benchmark.h>

#include "buffon/conway.hpp"
#include "buffon/dynamics.hpp"
#include "buffon/seeds.hpp"
#include "buffon/spectral.hpp"
#include "buffon/steinitz.hpp"
#include "buffon/symmetry.hpp"

using namespace buffon;

static void BM_SpectrumPentakis(benchmark::State& state) {
  const auto complex = conway_apply(ConwayOp::Kis, seed_complex("dodecahedron"));
  const Graph g = complex.skeleton();
  const BuffonOperator op = buffon_matrix(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(op));
  }
}
BENCHMARK(BM_SpectrumPentakis);

static void BM_IteratePentakis(benchmark::State& state) {
  const auto solid = catalan_pentakis_dodecahedron();
  const Graph g = solid.complex.skeleton();
  DeterministicRng rng(1);
  const Matrix start = perturbed(solid.coords, 0.05, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_to_limit(start, g));
  }
}
BENCHMARK(BM_IteratePentakis);

static void BM_AutomorphismsIcosahedron(benchmark::State& state) {
  const Graph g = seed_complex("icosahedron").skeleton();
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphisms(g));
  }
}
BENCHMARK(BM_AutomorphismsIcosahedron);

static void BM_PlanarityPentakis(benchmark::State& state) {
  const Graph g = conway_apply(ConwayOp::Kis, seed_complex("dodecahedron")).skeleton();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_planar(g));
  }
}
BENCHMARK(BM_PlanarityPentakis);

static void BM_BuffonStepPentakis(benchmark::State& state) {
  const auto solid = catalan_pentakis_dodecahedron();
  const Graph g = solid.complex.skeleton();
  CoordinateState s{solid.coords, 0, 0.0, 0};
  for (auto _ : state) {
    s = buffon_step(s, g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuffonStepPentakis);

BENCHMARK_MAIN();
