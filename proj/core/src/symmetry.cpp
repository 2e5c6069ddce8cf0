#include "buffon/symmetry.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "buffon/errors.hpp"

namespace buffon {

namespace {

// Per-vertex invariant: degree, sorted neighbor degrees, sorted distances to
// every other vertex. Automorphisms must preserve it.
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int w : g.neighbors(v)) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    std::vector<int> ds = dist[v];
    std::sort(ds.begin(), ds.end());
    inv[v].insert(inv[v].end(), ds.begin(), ds.end());
  }
  return inv;
}

struct Search {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> candidates;  // by assignment position
  std::vector<int> order;                    // vertex handled at position k
  std::vector<int> image;
  std::vector<char> used;
  long long nodes = 0;
  long long budget;
  std::vector<std::vector<int>> found;

  Search(const Graph& graph, long long node_budget) : g(graph), budget(node_budget) {
    n = g.vertex_count();
    const auto inv = vertex_invariants(g);
    // assignment order: greedy, always the unplaced vertex with the most
    // already-placed neighbors (ties by index) so adjacency pruning bites early
    std::vector<char> placed(n, 0);
    for (int k = 0; k < n; ++k) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : g.neighbors(v)) links += placed[w];
        if (links > best_links) {
          best_links = links;
          best = v;
        }
      }
      order.push_back(best);
      placed[best] = 1;
    }
    candidates.resize(n);
    for (int k = 0; k < n; ++k) {
      const int v = order[k];
      for (int w = 0; w < n; ++w)
        if (inv[w] == inv[v]) candidates[k].push_back(w);
    }
    image.assign(n, -1);
    used.assign(n, 0);
  }

  void run(int k) {
    if (++nodes > budget)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "automorphism search exceeded " + std::to_string(budget) + " nodes");
    if (k == n) {
      found.push_back(image);
      return;
    }
    const int v = order[k];
    for (int w : candidates[k]) {
      if (used[w]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int u = order[j];
        if (g.adjacent(v, u) != g.adjacent(w, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      run(k + 1);
      image[v] = -1;
      used[w] = 0;
    }
  }
};

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

std::vector<std::vector<int>> generated_group(const std::vector<std::vector<int>>& generators,
                                              int n) {
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::set<std::vector<int>> closure{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generators) {
        auto q = compose(gen, p);
        if (closure.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

AutomorphismGroup automorphisms(const Graph& graph, long long node_budget) {
  Search search(graph, node_budget);
  search.run(0);

  AutomorphismGroup out;
  out.order = static_cast<long long>(search.found.size());

  // greedy generating set: add an automorphism only when it enlarges the
  // generated subgroup
  std::set<std::vector<int>> closure;
  for (const auto& perm : generated_group({}, graph.vertex_count())) closure.insert(perm);
  for (const auto& perm : search.found) {
    if (closure.count(perm)) continue;
    out.generators.push_back(perm);
    closure.clear();
    for (const auto& p : generated_group(out.generators, graph.vertex_count()))
      closure.insert(p);
    if (static_cast<long long>(closure.size()) == out.order) break;
  }

  std::set<int> orbit;
  for (const auto& perm : search.found) orbit.insert(perm[0]);
  out.is_vertex_transitive = static_cast<int>(orbit.size()) == graph.vertex_count();
  return out;
}

bool multiplicity_pattern(const SpectralDecomposition& decomp,
                          const std::vector<int>& expected) {
  return multiplicities(decomp) == expected;
}

SubdominantSymmetryVerdict subdominant_multiplicity_check(const PolyhedralComplex& complex) {
  const Graph g = complex.skeleton();
  SubdominantSymmetryVerdict verdict;
  verdict.automorphism_order = automorphisms(g).order;
  verdict.platonic_order =
      verdict.automorphism_order >= 24 && verdict.automorphism_order % 12 == 0;
  const SpectralDecomposition decomp = spectrum(buffon_matrix(g));
  verdict.subdominant_multiplicity = subdominant_space(decomp).multiplicity;
  verdict.multiplicity_is_3 = verdict.subdominant_multiplicity == 3;
  return verdict;
}

}  // namespace buffon
