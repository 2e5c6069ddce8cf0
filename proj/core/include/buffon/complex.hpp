#pragma once

#include <string>
#include <utility>
#include <vector>

#include "buffon/graph.hpp"

namespace buffon {

// Combinatorial type of a closed polyhedron: oriented faces over indexed
// vertices. Faces are stored counterclockwise as seen from outside; every
// undirected edge appears in exactly two faces with opposite orientations,
// and V - E + F = 2. All of this is validated on construction.
class PolyhedralComplex {
 public:
  static PolyhedralComplex build(int vertex_count, std::vector<std::vector<int>> faces,
                                 std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool simplicial() const;

  Graph skeleton() const;

  // The face containing the directed edge a->b (each directed edge belongs to
  // exactly one face) and the position of a within it.
  std::pair<int, int> face_of(int a, int b) const;

  // Faces around vertex v in cyclic order, each paired with the successor of
  // v inside that face. The neighbor sequence this produces is the vertex
  // fan used by the Conway operators.
  std::vector<std::pair<int, int>> vertex_fan(int v) const;

  bool combinatorially_equal(const PolyhedralComplex& other) const;

 private:
  PolyhedralComplex() = default;
  int vertex_count_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> directed_face_;  // (a*n + b) -> face index, -1 if absent
  std::vector<int> directed_pos_;
};

}  // namespace buffon
