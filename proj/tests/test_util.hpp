#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "buffon/complex.hpp"
#include "buffon/dynamics.hpp"
#include "buffon/graph.hpp"
#include "buffon/linalg.hpp"

namespace testutil {

// Connected random graph: random spanning tree plus extra random edges.
inline buffon::Graph random_connected_graph(int n, int extra_edges,
                                            buffon::DeterministicRng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.next() % v), v);
  for (int e = 0; e < extra_edges; ++e) {
    const int a = static_cast<int>(rng.next() % n);
    const int b = static_cast<int>(rng.next() % n);
    if (a != b) edges.emplace_back(a, b);
  }
  return buffon::Graph::from_edges(n, std::move(edges));
}

// Random triangulation of the sphere: start from the tetrahedron, split
// random faces at a new vertex, then apply random diagonal flips. Produces a
// generic simplicial 3-connected planar complex.
inline buffon::PolyhedralComplex random_triangulation(int splits, int flips,
                                                      buffon::DeterministicRng& rng) {
  std::vector<std::vector<int>> faces{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  int nv = 4;
  for (int s = 0; s < splits; ++s) {
    const std::size_t fi = rng.next() % faces.size();
    const auto f = faces[fi];
    faces[fi] = {f[0], f[1], nv};
    faces.push_back({f[1], f[2], nv});
    faces.push_back({f[2], f[0], nv});
    ++nv;
  }
  auto directed_in = [&](const std::vector<int>& f, int a, int b) {
    for (int k = 0; k < 3; ++k)
      if (f[k] == a && f[(k + 1) % 3] == b) return true;
    return false;
  };
  auto adjacent = [&](int a, int b) {
    for (const auto& f : faces)
      if (directed_in(f, a, b) || directed_in(f, b, a)) return true;
    return false;
  };
  for (int t = 0; t < flips; ++t) {
    // pick a random directed edge and flip the diagonal of its two triangles
    const std::size_t fi = rng.next() % faces.size();
    const int k = static_cast<int>(rng.next() % 3);
    const int a = faces[fi][k], b = faces[fi][(k + 1) % 3];
    std::size_t gi = faces.size();
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (j != fi && directed_in(faces[j], b, a)) gi = j;
    const int c = faces[fi][(k + 2) % 3];
    int d = -1;
    for (int v : faces[gi])
      if (v != a && v != b) d = v;
    if (c == d || adjacent(c, d)) continue;
    // triangles around a must keep >= 3, likewise b
    int deg_a = 0, deg_b = 0;
    for (const auto& f : faces)
      for (int v : f) {
        deg_a += v == a;
        deg_b += v == b;
      }
    if (deg_a <= 3 || deg_b <= 3) continue;
    faces[fi] = {a, d, c};
    faces[gi] = {b, c, d};
  }
  return buffon::PolyhedralComplex::build(nv, std::move(faces));
}

inline double column_space_gap(const buffon::Matrix& a, const buffon::Matrix& b) {
  const auto angles = buffon::principal_angles(a, b);
  return angles.empty() ? 0.0 : angles.back();
}

}  // namespace testutil
