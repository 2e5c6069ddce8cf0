#pragma once

#include "buffon/graph.hpp"

namespace buffon {

struct SteinitzReport {
  bool is_planar = false;
  bool is_3_connected = false;
  // Planar and the embedding faces produced by the planarity test satisfy
  // V - E + F = 2 (a consistency check on the embedding itself).
  bool euler_ok = false;
};

// is_planar: Demoucron incremental face embedding per biconnected component.
// is_3_connected: every vertex pair deleted, connectivity rechecked
// (O(V^2 (V+E)); instances here are desk scale). The two are computed
// independently.
SteinitzReport validate_steinitz(const Graph& graph);

bool is_planar(const Graph& graph);
bool is_three_connected(const Graph& graph);

}  // namespace buffon
