#pragma once

#include <optional>
#include <string>
#include <vector>

#include "buffon/complex.hpp"
#include "buffon/linalg.hpp"
#include "buffon/spectral.hpp"

namespace buffon {

// Vertex coordinates with provenance. The dimension is the column count of
// coords; for eigenspace-sourced realizations it equals the multiplicity of
// the source group. Geometric checks take the matching complex alongside.
struct Realization {
  Matrix coords;       // n x d
  std::string source;  // "group:<k>", "iteration", "file", "reference"
};

// Coordinates straight from the group's basis vectors: vertex i gets the
// i-th entries of the basis. Defined up to linear transformation; no proper
// scaling is attempted, so convexity can legitimately fail downstream.
Realization realize(const EigenGroup& group, const PolyhedralComplex& complex,
                    int group_index = -1);

struct StarShapeResult {
  bool star_shaped = false;
  std::vector<int> offending_faces;  // faces whose signed volume breaks the sign
  double covering_degree = 0.0;      // total signed solid angle / 4 pi
};

// Uniform strict sign of all (centroid, face) signed volumes AND radial
// covering degree +-1. Self-intersecting star realizations wind more than
// once and fail the degree part with an empty offender list. Requires a
// simplicial complex and 3D coordinates.
StarShapeResult check_star_shaped(const Realization& realization,
                                  const PolyhedralComplex& complex);

// Supporting-plane test: every oriented face plane keeps all vertices on its
// inner side within 1e-9 of the coordinate scale.
bool check_convex(const Realization& realization, const PolyhedralComplex& complex);

struct FacePlanarityReport {
  double max_deviation = 0.0;          // over faces, normalized by face diameter
  std::vector<double> deviations;
  std::vector<bool> non_planar;        // deviation above 1e-6
};

FacePlanarityReport face_planarity(const Realization& realization,
                                   const PolyhedralComplex& complex);

struct AffineFit {
  Matrix linear;               // d_ref x d_src
  std::vector<double> offset;  // d_ref
  double residual = 0.0;       // relative to the centered reference scale
};

// Least squares over A, b minimizing sum ||A r_i + b - s_corr(i)||^2.
// correspondence maps source vertex i to a reference vertex; pass {} for the
// identity. Throws SingularFit for rank-deficient (collapsed) sources.
AffineFit affine_match(const Realization& realization, const Realization& reference,
                       const std::vector<int>& correspondence = {});

struct PyramidRatioReport {
  double mean = 0.0;
  double spread = 0.0;  // max - min
  std::vector<double> per_apex;
};

// For kis-derived complexes: pyramid height over the base-face best-fit
// plane, divided by the apex distance from the degree-weighted centroid.
PyramidRatioReport pyramid_height_ratio(const Realization& realization,
                                        const PolyhedralComplex& complex);

struct ShapeReport {
  bool star_shaped = false;
  bool convex = false;
  bool faces_planar = false;
  double max_face_deviation = 0.0;
  std::optional<double> affine_match_residual;
  int collapse_dim = 0;
};

// Combined verdicts; non-simplicial complexes are star-tested on the
// centroid-fan triangulation of their faces, so convex still implies
// star_shaped. Realizations with d != 3 only report the collapse dimension.
ShapeReport shape_report(const Realization& realization, const PolyhedralComplex& complex,
                         const std::optional<Realization>& reference = std::nullopt);

}  // namespace buffon
