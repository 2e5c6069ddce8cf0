#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "buffon/complex.hpp"
#include "buffon/linalg.hpp"

namespace buffon {

enum class ConwayOp { Dual, Kis, Truncate, Ambo };

std::optional<ConwayOp> conway_from_name(std::string_view name);
const char* conway_name(ConwayOp op);

// Combinatorial application. New vertices carry provenance labels:
//   dual      vertex per source face            "dual:<face>"
//   kis       apex per source face              "kis:<face>"
//   truncate  corner per directed edge (v,w)    "cut:<v>:<w>"
//   ambo      midpoint per undirected edge      "edge:<i>:<j>"
// Surviving vertices keep their previous labels.
PolyhedralComplex conway_apply(ConwayOp op, const PolyhedralComplex& complex);

// A complex together with a 3D realization of it.
struct GeometricPolyhedron {
  PolyhedralComplex complex;
  Matrix coords;  // n x 3
};

// Geometric application, used by the generator CLI:
//   dual      vertices at the polar points of the face planes (faces must be
//             planar and the origin strictly inside)
//   kis       apex at the polar point of each face plane
//   truncate  corners cut at the per-vertex parameter that equalizes the cut
//             edge with the shortened original edges (regular octagons on the
//             cube, regular hexagons on the icosahedron)
//   ambo      edge midpoints
GeometricPolyhedron conway_apply(ConwayOp op, const GeometricPolyhedron& solid);

// Apex/base pairs recovered from kis provenance labels.
struct KisPyramid {
  int apex;
  std::vector<int> base;
};
std::vector<KisPyramid> kis_pyramids(const PolyhedralComplex& complex);

}  // namespace buffon
