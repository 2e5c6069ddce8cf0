#include "buffon/cdv.hpp"

#include <cmath>
#include <map>
#include <string>

#include "buffon/errors.hpp"

namespace buffon {

namespace {

Vec3 polar_vertex(const Matrix& coords, const std::vector<int>& face, int face_index) {
  Matrix ata(3, 3);
  std::vector<double> atb(3, 0.0);
  double scale = 0.0;
  for (int v : face) {
    const Vec3 u = coords.row3(v);
    scale = std::max(scale, norm(u));
    const double q[3] = {u.x, u.y, u.z};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) ata(i, j) += q[i] * q[j];
      atb[i] += q[i];
    }
  }
  std::vector<double> w;
  if (!solve_linear(ata, atb, w))
    throw Error(ErrorKind::OriginOutside,
                "face " + std::to_string(face_index) + " plane passes through the origin");
  const Vec3 wf{w[0], w[1], w[2]};
  for (int v : face) {
    if (std::abs(dot(wf, coords.row3(v)) - 1.0) > 1e-8 * std::max(1.0, norm(wf) * scale))
      throw Error(ErrorKind::FaceNotPlanar,
                  "face " + std::to_string(face_index) +
                      ": polar vertex overdetermined beyond tolerance");
  }
  return wf;
}

}  // namespace

CdVMatrix cdv_matrix(const Realization& realization, const PolyhedralComplex& complex) {
  if (realization.coords.cols() != 3)
    throw Error(ErrorKind::DimensionError, "CdV construction needs 3D coordinates");
  if (static_cast<int>(realization.coords.rows()) != complex.vertex_count())
    throw Error(ErrorKind::ValidationError, "realization does not match the complex");
  const Matrix& u = realization.coords;
  const int n = complex.vertex_count();

  // origin strictly inside: every face plane has positive offset
  std::vector<Vec3> polar(complex.face_count());
  for (int f = 0; f < complex.face_count(); ++f) {
    polar[f] = polar_vertex(u, complex.faces()[f], f);
    if (norm(polar[f]) <= 0.0 || !std::isfinite(norm(polar[f])))
      throw Error(ErrorKind::OriginOutside, "degenerate polar vertex");
  }
  if (!check_convex(realization, complex))
    throw Error(ErrorKind::NotConvex, "realization is not a convex polyhedron");
  for (int f = 0; f < complex.face_count(); ++f) {
    // plane {x : (w_f, x) = 1} has distance 1/|w_f| from the origin on the
    // positive side; the origin satisfies (w_f, 0) = 0 < 1, so a finite polar
    // vertex certifies the origin is strictly inside this half-space.
    if (1.0 / norm(polar[f]) < 1e-12)
      throw Error(ErrorKind::OriginOutside, "origin sits on a face plane");
  }

  CdVMatrix out;
  out.size = n;
  out.matrix = Matrix(n, n);

  for (auto [i, j] : complex.edges()) {
    const auto [f, fpos] = complex.face_of(i, j);
    const auto [g, gpos] = complex.face_of(j, i);
    const Vec3 diff = polar[f] - polar[g];
    const Vec3 cr = cross(u.row3(i), u.row3(j));
    const double cr2 = dot(cr, cr);
    if (cr2 <= 0.0)
      throw Error(ErrorKind::ValidationError,
                  "adjacent vertices are collinear with the origin");
    const double value = dot(diff, cr) / cr2;
    const Vec3 residual = diff - cr * value;
    if (norm(residual) > 1e-8 * std::max(1.0, norm(diff)))
      throw Error(ErrorKind::ValidationError,
                  "polar edge is not parallel to the vertex cross product");
    out.matrix(i, j) = out.matrix(j, i) = -std::abs(value);
  }

  for (int i = 0; i < n; ++i) {
    Vec3 ui_prime{0, 0, 0};
    for (int j = 0; j < n; ++j)
      if (j != i && out.matrix(i, j) != 0.0) ui_prime += u.row3(j) * out.matrix(i, j);
    const Vec3 ui = u.row3(i);
    out.matrix(i, i) = -dot(ui_prime, ui) / dot(ui, ui);
  }

  // contract: sum_j M_ij u_j = 0 coordinatewise (relative 1e-8)
  const double uscale = u.max_abs() * out.matrix.max_abs();
  for (int i = 0; i < n; ++i) {
    Vec3 s{0, 0, 0};
    for (int j = 0; j < n; ++j) s += u.row3(j) * out.matrix(i, j);
    if (norm(s) > 1e-8 * std::max(1.0, uscale))
      throw Error(ErrorKind::ValidationError,
                  "kernel identity violated at vertex " + std::to_string(i));
  }

  const SymmetricEigen eig = jacobi_eigh(out.matrix);
  double top = 0.0;
  for (double v : eig.values) top = std::max(top, std::abs(v));
  const double tol = 1e-8 * top;
  int kernel_dim = 0;
  out.negative_count = 0;
  for (double v : eig.values) {
    if (std::abs(v) <= tol)
      ++kernel_dim;
    else if (v < 0.0)
      ++out.negative_count;
  }
  if (kernel_dim != 3)
    throw Error(ErrorKind::ValidationError,
                "kernel dimension is " + std::to_string(kernel_dim) + ", expected 3");
  out.kernel_basis = Matrix(n, 3);
  int col = 0;
  for (int k = 0; k < n && col < 3; ++k) {
    if (std::abs(eig.values[k]) <= tol) {
      for (int i = 0; i < n; ++i) out.kernel_basis(i, col) = eig.vectors(i, k);
      ++col;
    }
  }
  return out;
}

}  // namespace buffon
