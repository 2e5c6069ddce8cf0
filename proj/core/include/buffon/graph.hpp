#pragma once

#include <utility>
#include <vector>

namespace buffon {

// Undirected simple connected graph. Construction validates: indices in
// range, no self-loops, connectivity, positive degrees.
class Graph {
 public:
  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int a, int b) const { return flags_[static_cast<std::size_t>(a) * n_ + b]; }
  // Edges as (i, j) with i < j, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Induced subgraph connectivity after deleting the given vertices; used by
  // the k-connectivity test.
  bool connected_without(const std::vector<int>& removed) const;

  Graph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<char> flags_;  // n*n adjacency lookup
  std::vector<std::pair<int, int>> edges_;
};

Graph cycle_graph(int n);

}  // namespace buffon
