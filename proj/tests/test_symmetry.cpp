#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "buffon/conway.hpp"
#include "buffon/errors.hpp"
#include "buffon/seeds.hpp"
#include "buffon/spectral.hpp"
#include "buffon/symmetry.hpp"
#include "test_util.hpp"

using namespace buffon;

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

bool preserves_adjacency(const Graph& g, const std::vector<int>& perm) {
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j) != g.adjacent(perm[i], perm[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("K4 automorphism group is S4") {
  const auto aut = automorphisms(complete_graph(4));
  CHECK(aut.order == 24);
  CHECK(aut.is_vertex_transitive);
  CHECK(generated_group(aut.generators, 4).size() == 24);
}

TEST_CASE("icosahedron skeleton has automorphism order 120") {
  const Graph g = seed_complex("icosahedron").skeleton();
  const auto aut = automorphisms(g);
  CHECK(aut.order == 120);
  CHECK(aut.is_vertex_transitive);
  for (const auto& gen : aut.generators) CHECK(preserves_adjacency(g, gen));
  CHECK(generated_group(aut.generators, 12).size() == 120);
}

TEST_CASE("pentakis dodecahedron keeps the order-120 symmetry") {
  const Graph g = conway_apply(ConwayOp::Kis, seed_complex("dodecahedron")).skeleton();
  const auto aut = automorphisms(g);
  CHECK(aut.order == 120);
  CHECK_FALSE(aut.is_vertex_transitive);  // apexes and base vertices differ
  CHECK(generated_group(aut.generators, 32).size() == 120);
}

TEST_CASE("cube and octahedron share order 48; prisms are dihedral") {
  CHECK(automorphisms(seed_complex("cube").skeleton()).order == 48);
  CHECK(automorphisms(seed_complex("octahedron").skeleton()).order == 48);
  CHECK(automorphisms(seed_complex("prism(5)").skeleton()).order == 20);
  CHECK(automorphisms(seed_complex("prism(6)").skeleton()).order == 24);
}

TEST_CASE("generators preserve adjacency everywhere") {
  DeterministicRng rng(50);
  for (int t = 0; t < 10; ++t) {
    const auto c = testutil::random_triangulation(5, 20, rng);
    const Graph g = c.skeleton();
    const auto aut = automorphisms(g);
    for (const auto& gen : aut.generators) CHECK(preserves_adjacency(g, gen));
  }
}

TEST_CASE("search budget is enforced") {
  const Graph g = complete_graph(9);  // 362880 automorphisms
  CHECK_THROWS_AS(automorphisms(g, 1000), Error);
  try {
    automorphisms(g, 1000);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}

TEST_CASE("multiplicity patterns match the platonic decompositions") {
  auto pattern = [](const char* name) {
    return spectrum(buffon_matrix(seed_complex(name).skeleton()));
  };
  CHECK(multiplicity_pattern(pattern("tetrahedron"), {1, 3}));
  CHECK(multiplicity_pattern(pattern("octahedron"), {1, 3, 2}));
  CHECK(multiplicity_pattern(pattern("cube"), {1, 3, 3, 1}));
  CHECK(multiplicity_pattern(pattern("icosahedron"), {1, 3, 5, 3}));
  CHECK(multiplicity_pattern(pattern("dodecahedron"), {1, 3, 5, 4, 4, 3}));
  CHECK_FALSE(multiplicity_pattern(pattern("cube"), {1, 3, 4}));
}

TEST_CASE("eigenspaces are invariant under every automorphism") {
  for (const char* name : {"icosahedron", "octahedron"}) {
    CAPTURE(name);
    const auto c = seed_complex(name);
    const Graph g = c.skeleton();
    const auto aut = automorphisms(g);
    const auto decomp = spectrum(buffon_matrix(g));
    for (const auto& gen : aut.generators) {
      for (const auto& group : decomp.groups) {
        Matrix permuted(group.basis.rows(), group.basis.cols());
        for (std::size_t i = 0; i < group.basis.rows(); ++i)
          for (std::size_t k = 0; k < group.basis.cols(); ++k)
            permuted(gen[i], k) = group.basis(i, k);
        CHECK(testutil::column_space_gap(permuted, group.basis) < 1e-8);
      }
    }
  }
}

TEST_CASE("spectrum is identical under automorphism relabeling") {
  const Graph g = seed_complex("icosahedron").skeleton();
  const auto aut = automorphisms(g);
  REQUIRE(!aut.generators.empty());
  const auto d1 = spectrum(buffon_matrix(g));
  const auto d2 = spectrum(buffon_matrix(g.relabeled(aut.generators[0])));
  REQUIRE(d1.groups.size() == d2.groups.size());
  for (std::size_t k = 0; k < d1.groups.size(); ++k)
    CHECK(std::abs(d1.groups[k].eigenvalue - d2.groups[k].eigenvalue) < 1e-12);
}

TEST_CASE("subdominant multiplicity verdicts") {
  const auto pentakis = conway_apply(ConwayOp::Kis, seed_complex("dodecahedron"));
  auto verdict = subdominant_multiplicity_check(pentakis);
  CHECK(verdict.automorphism_order == 120);
  CHECK(verdict.platonic_order);
  CHECK(verdict.subdominant_multiplicity == 3);
  CHECK(verdict.multiplicity_is_3);

  const auto triakis = conway_apply(ConwayOp::Kis, seed_complex("tetrahedron"));
  verdict = subdominant_multiplicity_check(triakis);
  CHECK(verdict.automorphism_order == 24);
  CHECK(verdict.platonic_order);
  CHECK(verdict.multiplicity_is_3);

  // prism(6): the order precondition holds (24, divisible by 12) but the
  // dihedral action only pins a 2-dimensional subdominant space
  verdict = subdominant_multiplicity_check(seed_complex("prism(6)"));
  CHECK(verdict.automorphism_order == 24);
  CHECK(verdict.platonic_order);
  CHECK(verdict.subdominant_multiplicity == 2);
  CHECK_FALSE(verdict.multiplicity_is_3);
}
