#include "buffon/realization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "buffon/conway.hpp"
#include "buffon/errors.hpp"

namespace buffon {

namespace {

Vec3 degree_weighted_centroid(const Matrix& coords, const PolyhedralComplex& complex) {
  std::vector<int> degree(complex.vertex_count(), 0);
  for (auto [a, b] : complex.edges()) {
    ++degree[a];
    ++degree[b];
  }
  Vec3 c{0, 0, 0};
  double total = 0.0;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    c += coords.row3(v) * static_cast<double>(degree[v]);
    total += degree[v];
  }
  return c / total;
}

double coordinate_scale(const Matrix& coords) {
  const double m = coords.max_abs();
  return m > 0.0 ? m : 1.0;
}

// Best-fit plane of a point set: centroid + unit normal (smallest covariance
// eigenvector). Returns max |<p - c, n>| as the planarity deviation.
struct PlaneFit {
  Vec3 centroid;
  Vec3 normal;
  double deviation = 0.0;
};

PlaneFit fit_plane(const Matrix& coords, const std::vector<int>& face) {
  PlaneFit fit;
  for (int v : face) fit.centroid += coords.row3(v);
  fit.centroid = fit.centroid / static_cast<double>(face.size());
  Matrix cov(3, 3);
  for (int v : face) {
    const Vec3 p = coords.row3(v) - fit.centroid;
    const double q[3] = {p.x, p.y, p.z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) cov(i, j) += q[i] * q[j];
  }
  const SymmetricEigen eig = jacobi_eigh(cov);
  fit.normal = {eig.vectors(0, 0), eig.vectors(1, 0), eig.vectors(2, 0)};
  for (int v : face)
    fit.deviation = std::max(fit.deviation,
                             std::abs(dot(coords.row3(v) - fit.centroid, fit.normal)));
  return fit;
}

// Newell normal of an oriented face cycle; points outward for the stored
// counterclockwise-from-outside orientation.
Vec3 newell_normal(const Matrix& coords, const std::vector<int>& face) {
  Vec3 n{0, 0, 0};
  for (std::size_t i = 0; i < face.size(); ++i) {
    const Vec3 a = coords.row3(face[i]);
    const Vec3 b = coords.row3(face[(i + 1) % face.size()]);
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

double face_diameter(const Matrix& coords, const std::vector<int>& face) {
  double d = 0.0;
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j)
      d = std::max(d, norm(coords.row3(face[i]) - coords.row3(face[j])));
  return d;
}

double signed_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = dot(a, cross(b, c));
  const double la = norm(a), lb = norm(b), lc = norm(c);
  const double den = la * lb * lc + dot(a, b) * lc + dot(b, c) * la + dot(c, a) * lb;
  return 2.0 * std::atan2(num, den);
}

// Radial covering degree of the centroid-fan triangulated surface around the
// given center: total signed solid angle over 4 pi.
double fan_covering_degree(const Matrix& coords, const PolyhedralComplex& complex,
                           const Vec3& center) {
  double total = 0.0;
  for (const auto& f : complex.faces()) {
    Vec3 fc{0, 0, 0};
    for (int v : f) fc += coords.row3(v);
    fc = fc / static_cast<double>(f.size()) - center;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vec3 a = coords.row3(f[i]) - center;
      const Vec3 b = coords.row3(f[(i + 1) % f.size()]) - center;
      total += signed_solid_angle(a, b, fc);
    }
  }
  return total / (4.0 * std::numbers::pi);
}

// Signed-volume / solid-angle star test on an explicit triangle list.
StarShapeResult star_test(const Matrix& coords, const PolyhedralComplex& complex,
                          const std::vector<std::array<Vec3, 3>>& triangles,
                          const std::vector<int>& face_of_triangle) {
  StarShapeResult result;
  const double scale = coordinate_scale(coords);
  int positive = 0, negative = 0;
  std::vector<int> signs(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& [a, b, c] = triangles[t];
    const double vol = dot(cross(a, b), c);
    signs[t] = vol > 0.0 ? 1 : (vol < 0.0 ? -1 : 0);
    (signs[t] > 0 ? positive : negative) += signs[t] != 0 ? 1 : 0;
  }
  const int majority = positive >= negative ? 1 : -1;
  for (std::size_t t = 0; t < triangles.size(); ++t)
    if (signs[t] != majority) result.offending_faces.push_back(face_of_triangle[t]);
  std::sort(result.offending_faces.begin(), result.offending_faces.end());
  result.offending_faces.erase(
      std::unique(result.offending_faces.begin(), result.offending_faces.end()),
      result.offending_faces.end());

  double total_angle = 0.0;
  for (const auto& [a, b, c] : triangles) total_angle += signed_solid_angle(a, b, c);
  result.covering_degree = total_angle / (4.0 * std::numbers::pi);
  result.star_shaped = result.offending_faces.empty() &&
                       std::abs(std::abs(result.covering_degree) - 1.0) < 1e-6;
  (void)scale;
  return result;
}

StarShapeResult star_shaped_fan(const Realization& realization,
                                const PolyhedralComplex& complex) {
  const Matrix& coords = realization.coords;
  const Vec3 center = degree_weighted_centroid(coords, complex);
  const double scale = coordinate_scale(coords);
  std::vector<std::array<Vec3, 3>> triangles;
  std::vector<int> face_of;
  for (int fi = 0; fi < complex.face_count(); ++fi) {
    const auto& f = complex.faces()[fi];
    if (f.size() == 3) {
      const Vec3 a = coords.row3(f[0]) - center;
      const Vec3 b = coords.row3(f[1]) - center;
      const Vec3 c = coords.row3(f[2]) - center;
      if (norm(cross(b - a, c - a)) < 1e-12 * scale * scale)
        throw Error(ErrorKind::DegenerateFace,
                    "face " + std::to_string(fi) + " has zero area");
      triangles.push_back({a, b, c});
      face_of.push_back(fi);
    } else {
      Vec3 fc{0, 0, 0};
      for (int v : f) fc += coords.row3(v);
      fc = fc / static_cast<double>(f.size()) - center;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const Vec3 a = coords.row3(f[i]) - center;
        const Vec3 b = coords.row3(f[(i + 1) % f.size()]) - center;
        triangles.push_back({a, b, fc});
        face_of.push_back(fi);
      }
    }
  }
  return star_test(coords, complex, triangles, face_of);
}

}  // namespace

Realization realize(const EigenGroup& group, const PolyhedralComplex& complex,
                    int group_index) {
  if (static_cast<int>(group.basis.rows()) != complex.vertex_count())
    throw Error(ErrorKind::ValidationError,
                "eigen group size does not match the complex");
  Realization r;
  r.coords = group.basis;
  r.source = group_index >= 0 ? "group:" + std::to_string(group_index) : "group";
  return r;
}

StarShapeResult check_star_shaped(const Realization& realization,
                                  const PolyhedralComplex& complex) {
  if (realization.coords.cols() != 3)
    throw Error(ErrorKind::DimensionError, "star-shape test needs 3D coordinates");
  if (!complex.simplicial())
    throw Error(ErrorKind::NotSimplicial, "star-shape test needs a simplicial complex");
  if (static_cast<int>(realization.coords.rows()) != complex.vertex_count())
    throw Error(ErrorKind::ValidationError, "coordinate count does not match complex");
  return star_shaped_fan(realization, complex);
}

bool check_convex(const Realization& realization, const PolyhedralComplex& complex) {
  if (realization.coords.cols() != 3)
    throw Error(ErrorKind::DimensionError, "convexity test needs 3D coordinates");
  const Matrix& coords = realization.coords;
  const double scale = coordinate_scale(coords);
  const double tol = 1e-9 * scale;

  // a collapsed coordinate set is not a convex polyhedron
  Matrix centered = coords;
  const Vec3 mean = degree_weighted_centroid(coords, complex);
  for (std::size_t i = 0; i < centered.rows(); ++i)
    centered.set_row3(i, centered.row3(i) - mean);
  if (numerical_rank(centered, 1e-8) < 3) return false;

  // coalesced vertices cannot all be hull vertices (realizations where
  // vertices collapse pairwise wrap the hull more than once)
  for (int i = 0; i < complex.vertex_count(); ++i)
    for (int j = i + 1; j < complex.vertex_count(); ++j)
      if (norm(coords.row3(i) - coords.row3(j)) <= tol) return false;

  // the boundary must wrap the centroid exactly once
  if (std::abs(std::abs(fan_covering_degree(coords, complex, mean)) - 1.0) > 1e-6)
    return false;

  for (const auto& face : complex.faces()) {
    const PlaneFit fit = fit_plane(coords, face);
    if (fit.deviation > tol) return false;  // broken face cannot bound a convex solid
    if (norm(newell_normal(coords, face)) < 1e-12 * scale * scale)
      return false;  // zero-area face
    // supporting-plane test, two-sided so the verdict is independent of the
    // global orientation (eigenvector sign can mirror the whole realization)
    double lo = 0.0, hi = 0.0;
    const double offset = dot(fit.normal, fit.centroid);
    for (int v = 0; v < complex.vertex_count(); ++v) {
      const double side = dot(fit.normal, coords.row3(v)) - offset;
      lo = std::min(lo, side);
      hi = std::max(hi, side);
    }
    if (hi > tol && lo < -tol) return false;  // vertices straddle the face plane
  }
  return true;
}

FacePlanarityReport face_planarity(const Realization& realization,
                                   const PolyhedralComplex& complex) {
  if (realization.coords.cols() != 3)
    throw Error(ErrorKind::DimensionError, "planarity report needs 3D coordinates");
  FacePlanarityReport report;
  for (const auto& face : complex.faces()) {
    double normalized = 0.0;
    if (face.size() > 3) {
      const PlaneFit fit = fit_plane(realization.coords, face);
      const double diam = face_diameter(realization.coords, face);
      normalized = diam > 0.0 ? fit.deviation / diam : 0.0;
    }
    report.deviations.push_back(normalized);
    report.non_planar.push_back(normalized > 1e-6);
    report.max_deviation = std::max(report.max_deviation, normalized);
  }
  return report;
}

AffineFit affine_match(const Realization& realization, const Realization& reference,
                       const std::vector<int>& correspondence) {
  const Matrix& src = realization.coords;
  const Matrix& ref = reference.coords;
  const std::size_t n = src.rows();
  if (ref.rows() != n)
    throw Error(ErrorKind::ValidationError, "vertex counts differ");
  std::vector<int> corr = correspondence;
  if (corr.empty()) {
    corr.resize(n);
    for (std::size_t i = 0; i < n; ++i) corr[i] = static_cast<int>(i);
  }
  const std::size_t ds = src.cols(), dr = ref.cols();

  std::vector<double> src_mean(ds, 0.0), ref_mean(dr, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ds; ++j) src_mean[j] += src(i, j) / n;
    for (std::size_t j = 0; j < dr; ++j) ref_mean[j] += ref(corr[i], j) / n;
  }
  Matrix sc(n, ds), rc(n, dr);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ds; ++j) sc(i, j) = src(i, j) - src_mean[j];
    for (std::size_t j = 0; j < dr; ++j) rc(i, j) = ref(corr[i], j) - ref_mean[j];
  }

  const Matrix gram = sc.transposed() * sc;  // ds x ds
  {
    const std::vector<double> sv = singular_values(sc);
    if (sv.empty() || sv[0] == 0.0 || sv.back() < 1e-10 * sv[0])
      throw Error(ErrorKind::SingularFit, "source realization is rank-deficient");
  }
  // A^T column by column: gram * a_j = sc^T rc_j
  const Matrix rhs = sc.transposed() * rc;  // ds x dr
  Matrix a_t(ds, dr);
  for (std::size_t j = 0; j < dr; ++j) {
    std::vector<double> col(ds), x;
    for (std::size_t i = 0; i < ds; ++i) col[i] = rhs(i, j);
    if (!solve_linear(gram, col, x))
      throw Error(ErrorKind::SingularFit, "normal equations are singular");
    for (std::size_t i = 0; i < ds; ++i) a_t(i, j) = x[i];
  }

  AffineFit fit;
  fit.linear = a_t.transposed();
  fit.offset.resize(dr);
  for (std::size_t j = 0; j < dr; ++j) {
    double v = ref_mean[j];
    for (std::size_t k = 0; k < ds; ++k) v -= fit.linear(j, k) * src_mean[k];
    fit.offset[j] = v;
  }
  const Matrix fitted = sc * a_t;
  const double ref_scale = rc.frobenius_norm();
  fit.residual = ref_scale > 0.0 ? (fitted - rc).frobenius_norm() / ref_scale
                                 : (fitted - rc).frobenius_norm();
  return fit;
}

PyramidRatioReport pyramid_height_ratio(const Realization& realization,
                                        const PolyhedralComplex& complex) {
  if (realization.coords.cols() != 3)
    throw Error(ErrorKind::DimensionError, "pyramid ratios need 3D coordinates");
  const auto pyramids = kis_pyramids(complex);
  if (pyramids.empty())
    throw Error(ErrorKind::ValidationError, "complex carries no kis provenance");
  const Matrix& coords = realization.coords;
  const Vec3 center = degree_weighted_centroid(coords, complex);

  PyramidRatioReport report;
  double lo = 1e300, hi = -1e300;
  for (const auto& p : pyramids) {
    const PlaneFit base = fit_plane(coords, p.base);
    const Vec3 apex = coords.row3(p.apex);
    const double height = std::abs(dot(apex - base.centroid, base.normal));
    const double distance = norm(apex - center);
    const double ratio = distance > 0.0 ? height / distance : 0.0;
    report.per_apex.push_back(ratio);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    report.mean += ratio;
  }
  report.mean /= report.per_apex.size();
  report.spread = hi - lo;
  return report;
}

ShapeReport shape_report(const Realization& realization, const PolyhedralComplex& complex,
                         const std::optional<Realization>& reference) {
  ShapeReport report;
  Matrix centered = realization.coords;
  {
    const std::size_t n = centered.rows(), d = centered.cols();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) mean[j] += centered(i, j) / n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) centered(i, j) -= mean[j];
  }
  report.collapse_dim = numerical_rank(centered, 1e-8);

  if (realization.coords.cols() == 3) {
    report.convex = check_convex(realization, complex);
    const FacePlanarityReport planarity = face_planarity(realization, complex);
    report.max_face_deviation = planarity.max_deviation;
    report.faces_planar = planarity.max_deviation <= 1e-6;
    report.star_shaped = star_shaped_fan(realization, complex).star_shaped;
  }
  if (reference) {
    try {
      report.affine_match_residual = affine_match(realization, *reference).residual;
    } catch (const Error&) {
      report.affine_match_residual = std::nullopt;  // collapsed: no meaningful fit
    }
  }
  return report;
}

}  // namespace buffon
