#include "buffon/steinitz.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace buffon {

namespace {

using Edge = std::pair<int, int>;

Edge normalize(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Biconnected components as edge lists (Hopcroft-Tarjan, iterative).
std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> components;
  int timer = 0;

  struct Frame {
    int v, parent;
    std::size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& nbrs = g.neighbors(fr.v);
      if (fr.next < nbrs.size()) {
        const int w = nbrs[fr.next++];
        if (w == fr.parent) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(normalize(fr.v, w));
          disc[w] = low[w] = timer++;
          stack.push_back({w, fr.v});
        } else if (disc[w] < disc[fr.v]) {
          edge_stack.push_back(normalize(fr.v, w));
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        const int v = fr.v, parent = fr.parent;
        stack.pop_back();
        if (parent >= 0) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) {
            std::vector<Edge> comp;
            const Edge cut = normalize(parent, v);
            while (!edge_stack.empty()) {
              const Edge e = edge_stack.back();
              edge_stack.pop_back();
              comp.push_back(e);
              if (e == cut) break;
            }
            if (!comp.empty()) components.push_back(std::move(comp));
          }
        }
      }
    }
  }
  return components;
}

// Demoucron's incremental embedding for a biconnected graph given as an edge
// list. Returns the number of embedding faces, or nullopt when non-planar.
class Demoucron {
 public:
  explicit Demoucron(const std::vector<Edge>& edges) {
    std::set<int> vset;
    for (const auto& [a, b] : edges) {
      vset.insert(a);
      vset.insert(b);
    }
    vertices_.assign(vset.begin(), vset.end());
    for (int v : vertices_) index_[v] = static_cast<int>(adj_.size()), adj_.push_back({});
    for (const auto& [a, b] : edges) {
      adj_[index_[a]].push_back(index_[b]);
      adj_[index_[b]].push_back(index_[a]);
      edges_.push_back({index_[a], index_[b]});
    }
  }

  std::optional<int> face_count() {
    const int n = static_cast<int>(adj_.size());
    const int m = static_cast<int>(edges_.size());
    if (m <= 2) return 1;
    if (m > 3 * n - 6) return std::nullopt;

    std::vector<int> cycle = find_cycle();
    embedded_vertex_.assign(n, false);
    for (int v : cycle) embedded_vertex_[v] = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      embedded_edges_.insert(normalize(cycle[i], cycle[(i + 1) % cycle.size()]));
    faces_.push_back(cycle);
    std::reverse(cycle.begin(), cycle.end());
    faces_.push_back(cycle);

    while (true) {
      auto fragments = compute_fragments();
      if (fragments.empty()) break;
      // fragment with the fewest admissible faces; zero means non-planar
      std::size_t pick = 0;
      std::size_t fewest = SIZE_MAX;
      std::vector<std::vector<int>> admissible(fragments.size());
      for (std::size_t i = 0; i < fragments.size(); ++i) {
        for (std::size_t f = 0; f < faces_.size(); ++f) {
          if (contains_all(faces_[f], fragments[i].contacts)) admissible[i].push_back(f);
        }
        if (admissible[i].empty()) return std::nullopt;
        if (admissible[i].size() < fewest) {
          fewest = admissible[i].size();
          pick = i;
        }
      }
      embed_path(path_through(fragments[pick]), admissible[pick][0]);
    }
    return static_cast<int>(faces_.size());
  }

 private:
  struct Fragment {
    std::vector<int> contacts;       // embedded attachment vertices
    std::vector<int> interior;       // non-embedded vertices (empty for a chord)
    std::optional<Edge> chord;
  };

  std::vector<int> find_cycle() const {
    const int n = static_cast<int>(adj_.size());
    std::vector<int> parent(n, -2);
    std::vector<int> order;
    parent[0] = -1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        } else if (w != parent[v]) {
          // non-tree edge v..w: walk both to the root, splice at the meet
          std::set<int> on_pv{v};
          for (int x = v; parent[x] >= 0; x = parent[x]) on_pv.insert(parent[x]);
          std::vector<int> cycle{w};
          int x = w;
          while (!on_pv.count(x)) {
            x = parent[x];
            cycle.push_back(x);
          }
          const int meet = x;
          std::reverse(cycle.begin(), cycle.end());  // meet .. w
          // close with v .. child-of-meet so (w,v) is the splicing edge
          for (int y = v; y != meet; y = parent[y]) cycle.push_back(y);
          if (cycle.size() >= 3) return cycle;
        }
      }
    }
    return {};  // unreachable for a biconnected component with a cycle
  }

  static bool contains_all(const std::vector<int>& face, const std::vector<int>& req) {
    for (int v : req)
      if (std::find(face.begin(), face.end(), v) == face.end()) return false;
    return true;
  }

  std::vector<Fragment> compute_fragments() const {
    std::vector<Fragment> out;
    for (const auto& [a, b] : edges_) {
      if (embedded_vertex_[a] && embedded_vertex_[b] && !embedded_edges_.count(normalize(a, b))) {
        Fragment fr;
        fr.contacts = {a, b};
        fr.chord = normalize(a, b);
        out.push_back(std::move(fr));
      }
    }
    const int n = static_cast<int>(adj_.size());
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (embedded_vertex_[s] || comp[s] != -1) continue;
      const int id = static_cast<int>(out.size());
      Fragment fr;
      std::set<int> contacts;
      std::vector<int> stack{s};
      comp[s] = id;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        fr.interior.push_back(v);
        for (int w : adj_[v]) {
          if (embedded_vertex_[w]) {
            contacts.insert(w);
          } else if (comp[w] == -1) {
            comp[w] = id;
            stack.push_back(w);
          }
        }
      }
      fr.contacts.assign(contacts.begin(), contacts.end());
      out.push_back(std::move(fr));
    }
    return out;
  }

  // A path between two contact vertices whose interior avoids the embedded
  // subgraph; for a chord it is just the edge itself.
  std::vector<int> path_through(const Fragment& fr) const {
    if (fr.chord) return {fr.chord->first, fr.chord->second};
    const int start = fr.contacts[0];
    std::map<int, int> parent;  // interior vertex -> predecessor
    std::vector<int> queue;
    for (int w : adj_[start]) {
      if (!embedded_vertex_[w] && !parent.count(w) &&
          std::find(fr.interior.begin(), fr.interior.end(), w) != fr.interior.end()) {
        parent[w] = start;
        queue.push_back(w);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int w : adj_[v]) {
        if (embedded_vertex_[w]) {
          if (w == start) continue;
          std::vector<int> path{w};
          for (int x = v; x != start; x = parent.at(x)) path.push_back(x);
          path.push_back(start);
          std::reverse(path.begin(), path.end());
          return path;  // start, interior vertices, other contact
        }
        if (!parent.count(w)) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    return {};  // unreachable: a fragment in a biconnected graph has >= 2 contacts
  }

  void embed_path(const std::vector<int>& path, std::size_t face_idx) {
    const int a = path.front(), b = path.back();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      embedded_edges_.insert(normalize(path[i], path[i + 1]));
      embedded_vertex_[path[i]] = true;
    }
    embedded_vertex_[b] = true;

    const std::vector<int> face = faces_[face_idx];
    const auto ia = std::find(face.begin(), face.end(), a) - face.begin();
    std::vector<int> rotated(face.begin() + ia, face.end());
    rotated.insert(rotated.end(), face.begin(), face.begin() + ia);
    const auto ib = std::find(rotated.begin(), rotated.end(), b) - rotated.begin();

    // rotated = a ... b ... ; split along the path
    std::vector<int> f1(path.begin(), path.end() - 1);       // a .. (before b)
    f1.insert(f1.end(), rotated.begin() + ib, rotated.end());  // b .. back to a
    std::vector<int> f2(rotated.begin(), rotated.begin() + ib);  // a .. (before b)
    f2.insert(f2.end(), path.rbegin(), path.rend() - 1);          // b .. back to a

    faces_[face_idx] = std::move(f1);
    faces_.push_back(std::move(f2));
  }

  std::vector<int> vertices_;
  std::map<int, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<char> embedded_vertex_;
  std::set<Edge> embedded_edges_;
  std::vector<std::vector<int>> faces_;
};

}  // namespace

bool is_planar(const Graph& graph) {
  for (const auto& comp : biconnected_components(graph)) {
    if (!Demoucron(comp).face_count()) return false;
  }
  return true;
}

bool is_three_connected(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n < 4) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!graph.connected_without({a, b})) return false;
  return true;
}

SteinitzReport validate_steinitz(const Graph& graph) {
  SteinitzReport report;
  report.is_3_connected = is_three_connected(graph);

  // embed every biconnected component; merging the components' outer faces at
  // cut vertices gives F = sum(F_c - 1) + 1 for the whole connected graph
  int total_faces = 1;
  bool planar = true;
  for (const auto& comp : biconnected_components(graph)) {
    const auto fc = Demoucron(comp).face_count();
    if (!fc) {
      planar = false;
      break;
    }
    total_faces += *fc - 1;
  }
  report.is_planar = planar;
  report.euler_ok =
      planar && (graph.vertex_count() - graph.edge_count() + total_faces == 2);
  return report;
}

}  // namespace buffon
