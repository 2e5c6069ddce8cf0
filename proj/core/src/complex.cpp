#include "buffon/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "buffon/errors.hpp"

namespace buffon {

PolyhedralComplex PolyhedralComplex::build(int vertex_count,
                                           std::vector<std::vector<int>> faces,
                                           std::vector<std::string> labels) {
  if (vertex_count <= 0)
    throw Error(ErrorKind::ValidationError, "complex needs a positive vertex count");
  if (faces.empty())
    throw Error(ErrorKind::ValidationError, "complex needs at least one face");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
    throw Error(ErrorKind::ValidationError, "label count does not match vertex count");

  PolyhedralComplex c;
  c.vertex_count_ = vertex_count;
  const std::size_t n = static_cast<std::size_t>(vertex_count);
  c.directed_face_.assign(n * n, -1);
  c.directed_pos_.assign(n * n, -1);

  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& f = faces[fi];
    if (f.size() < 3)
      throw Error(ErrorKind::DegenerateFace,
                  "face " + std::to_string(fi) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : f) {
      if (v < 0 || v >= vertex_count)
        throw Error(ErrorKind::ValidationError,
                    "face " + std::to_string(fi) + " references vertex " + std::to_string(v));
      if (!seen.insert(v).second)
        throw Error(ErrorKind::DegenerateFace,
                    "face " + std::to_string(fi) + " repeats vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      const std::size_t key = static_cast<std::size_t>(a) * n + b;
      if (c.directed_face_[key] != -1)
        throw Error(ErrorKind::NonManifoldEdge,
                    "directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                        " appears in more than one face");
      c.directed_face_[key] = fi;
      c.directed_pos_[key] = static_cast<int>(i);
    }
  }

  std::set<std::pair<int, int>> undirected;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      if (c.directed_face_[static_cast<std::size_t>(b) * n + a] == -1)
        throw Error(ErrorKind::NonManifoldEdge,
                    "edge {" + std::to_string(a) + "," + std::to_string(b) +
                        "} lacks its oppositely oriented twin");
      undirected.insert({std::min(a, b), std::max(a, b)});
    }
  }
  c.edges_.assign(undirected.begin(), undirected.end());

  const int euler = vertex_count - static_cast<int>(c.edges_.size()) +
                    static_cast<int>(faces.size());
  if (euler != 2)
    throw Error(ErrorKind::EulerViolation,
                "V - E + F = " + std::to_string(euler) + ", expected 2");

  c.faces_ = std::move(faces);
  c.labels_ = std::move(labels);
  return c;
}

bool PolyhedralComplex::simplicial() const {
  return std::all_of(faces_.begin(), faces_.end(),
                     [](const auto& f) { return f.size() == 3; });
}

Graph PolyhedralComplex::skeleton() const {
  return Graph::from_edges(vertex_count_, edges_);
}

std::pair<int, int> PolyhedralComplex::face_of(int a, int b) const {
  const std::size_t key = static_cast<std::size_t>(a) * vertex_count_ + b;
  return {directed_face_[key], directed_pos_[key]};
}

std::vector<std::pair<int, int>> PolyhedralComplex::vertex_fan(int v) const {
  // Start from any face containing v, then hop across the edge v->pred to the
  // neighboring face; this walks the faces around v in a consistent cyclic
  // order for a validated oriented complex.
  int start_face = -1, succ = -1, pred = -1;
  for (int fi = 0; fi < face_count() && start_face < 0; ++fi) {
    const auto& f = faces_[fi];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == v) {
        start_face = fi;
        succ = f[(i + 1) % f.size()];
        pred = f[(i + f.size() - 1) % f.size()];
        break;
      }
    }
  }
  std::vector<std::pair<int, int>> fan;
  int face = start_face;
  while (true) {
    fan.push_back({face, succ});
    const auto [nf, pos] = face_of(v, pred);
    const auto& f = faces_[nf];
    face = nf;
    succ = f[(pos + 1) % f.size()];
    pred = f[(pos + f.size() - 1) % f.size()];
    if (face == start_face) break;
  }
  return fan;
}

bool PolyhedralComplex::combinatorially_equal(const PolyhedralComplex& other) const {
  if (vertex_count_ != other.vertex_count_ || faces_.size() != other.faces_.size())
    return false;
  auto canon = [](const std::vector<std::vector<int>>& faces) {
    std::vector<std::vector<int>> out;
    out.reserve(faces.size());
    for (const auto& f : faces) {
      // rotate the cycle so the smallest vertex leads; orientation kept
      auto it = std::min_element(f.begin(), f.end());
      std::vector<int> r(it, f.end());
      r.insert(r.end(), f.begin(), it);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(faces_) == canon(other.faces_);
}

}  // namespace buffon
