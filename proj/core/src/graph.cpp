#include "buffon/graph.hpp"

#include <algorithm>
#include <string>

#include "buffon/errors.hpp"

namespace buffon {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count <= 0)
    throw Error(ErrorKind::ValidationError, "graph needs a positive vertex count");
  Graph g;
  g.n_ = vertex_count;
  g.adj_.assign(vertex_count, {});
  g.flags_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, 0);
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= vertex_count)
      throw Error(ErrorKind::ValidationError,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b)
      throw Error(ErrorKind::ValidationError, "self-loop at vertex " + std::to_string(a));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  for (auto [a, b] : g.edges_) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
    g.flags_[static_cast<std::size_t>(a) * vertex_count + b] = 1;
    g.flags_[static_cast<std::size_t>(b) * vertex_count + a] = 1;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  if (!g.connected_without({}))
    throw Error(ErrorKind::Disconnected, "graph is not connected");
  return g;
}

bool Graph::connected_without(const std::vector<int>& removed) const {
  std::vector<char> blocked(n_, 0);
  for (int v : removed) blocked[v] = 1;
  int start = -1, alive = 0;
  for (int v = 0; v < n_; ++v)
    if (!blocked[v]) {
      if (start < 0) start = v;
      ++alive;
    }
  if (alive == 0) return true;
  std::vector<int> stack{start};
  std::vector<char> seen(n_, 0);
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (auto [a, b] : edges_) edges.emplace_back(perm[a], perm[b]);
  return from_edges(n_, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::ValidationError, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace buffon
