#pragma once

#include <string>

#include "buffon/conway.hpp"

namespace buffon {

// Seed names: tetrahedron, cube, octahedron, dodecahedron, icosahedron,
// prism(n) with n >= 3. polygon(n) is not a closed surface and is served by
// polygon_coords / cycle_graph instead. Throws UnknownSeed otherwise.
//
// Canonical vertex orderings (frozen; golden tests rely on them):
//   tetrahedron   (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)
//   cube          (+-1,+-1,+-1), index bits = (x>0)<<2 | (y>0)<<1 | (z>0)
//   octahedron    +x, -x, +y, -y, +z, -z
//   icosahedron   cyclic family of (0, +-1, +-phi): four blocks
//                 (0,s1,s2 phi), (s1, s2 phi, 0), (s2 phi, 0, s1)
//                 for (s1,s2) in (+,+), (+,-), (-,+), (-,-)
//   dodecahedron  the 8 cube points, then the dual-aligned cyclic family
//                 (s1/phi, 0, s2 phi), (s2 phi, s1/phi, 0), (0, s2 phi, s1/phi)
//   prism(n)      bottom n-gon at z=-h/2 (vertices 0..n-1, angle 2 pi k/n),
//                 top n-gon at z=+h/2; h = 2 sin(pi/n) makes the sides square
// Faces are counterclockwise from outside.
PolyhedralComplex seed_complex(const std::string& name);

// Reference coordinates matching the canonical orderings above.
GeometricPolyhedron seed_geometry(const std::string& name);

bool is_known_seed(const std::string& name);

// polygon(n): vertex k at angle 2 pi k / n on the unit circle, n x 2.
Matrix polygon_coords(int n);

// Archimedean truncated cube: truncate(cube) with the corner cut 1/(2+sqrt 2)
// that makes the octagons regular. Vertex order matches
// conway_apply(Truncate, cube).
GeometricPolyhedron regular_truncated_cube();

// Catalan pentakis dodecahedron (dual of the regular truncated icosahedron),
// in kis(dodecahedron) vertex order: base vertices are the dodecahedron
// coordinates divided by phi^2, apexes are the icosahedron coordinates times
// 3/(3 phi + 4).
GeometricPolyhedron catalan_pentakis_dodecahedron();

}  // namespace buffon
