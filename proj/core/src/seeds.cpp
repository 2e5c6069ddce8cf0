#include "buffon/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "buffon/errors.hpp"

namespace buffon {

namespace {

constexpr double kPhi = 1.6180339887498948482;  // (1 + sqrt 5) / 2

Matrix from_rows(const std::vector<Vec3>& rows) {
  Matrix m(rows.size(), 3);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row3(i, rows[i]);
  return m;
}

// Faces of a convex solid with known outward face axes: take the vertices
// maximizing the dot product against each axis and order them by angle
// around it. Deterministic for the frozen vertex lists.
std::vector<std::vector<int>> faces_from_axes(const Matrix& verts,
                                              const std::vector<Vec3>& axes,
                                              std::size_t face_size) {
  std::vector<std::vector<int>> faces;
  for (const Vec3& axis : axes) {
    const Vec3 n = normalized(axis);
    double best = -1e300;
    for (std::size_t v = 0; v < verts.rows(); ++v)
      best = std::max(best, dot(verts.row3(v), n));
    std::vector<int> idx;
    for (std::size_t v = 0; v < verts.rows(); ++v)
      if (dot(verts.row3(v), n) > best - 1e-9) idx.push_back(static_cast<int>(v));
    if (idx.size() != face_size)
      throw Error(ErrorKind::ValidationError, "face axis selects the wrong vertex count");
    Vec3 t = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(n, t));
    const Vec3 e2 = cross(n, e1);
    Vec3 centroid{0, 0, 0};
    for (int v : idx) centroid += verts.row3(v);
    centroid = centroid / static_cast<double>(idx.size());
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const Vec3 pa = verts.row3(a) - centroid, pb = verts.row3(b) - centroid;
      return std::atan2(dot(pa, e2), dot(pa, e1)) < std::atan2(dot(pb, e2), dot(pb, e1));
    });
    faces.push_back(std::move(idx));
  }
  return faces;
}

std::vector<Vec3> cube_vertices() {
  std::vector<Vec3> v;
  for (int k = 0; k < 8; ++k)
    v.push_back({k & 4 ? 1.0 : -1.0, k & 2 ? 1.0 : -1.0, k & 1 ? 1.0 : -1.0});
  return v;
}

std::vector<Vec3> octa_vertices() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<Vec3> icosa_vertices() {
  std::vector<Vec3> v;
  for (auto [s1, s2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    v.push_back({0, static_cast<double>(s1), s2 * kPhi});
    v.push_back({static_cast<double>(s1), s2 * kPhi, 0});
    v.push_back({s2 * kPhi, 0, static_cast<double>(s1)});
  }
  return v;
}

std::vector<Vec3> dodeca_vertices() {
  std::vector<Vec3> v = cube_vertices();
  for (auto [s1, s2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    v.push_back({s1 / kPhi, 0, s2 * kPhi});
    v.push_back({s2 * kPhi, s1 / kPhi, 0});
    v.push_back({0, s2 * kPhi, s1 / kPhi});
  }
  return v;
}

GeometricPolyhedron make_tetrahedron() {
  const std::vector<Vec3> v{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  Matrix coords = from_rows(v);
  std::vector<Vec3> axes;
  for (const Vec3& p : v) axes.push_back(p * -1.0);
  auto faces = faces_from_axes(coords, axes, 3);
  return {PolyhedralComplex::build(4, std::move(faces)), std::move(coords)};
}

GeometricPolyhedron make_cube() {
  Matrix coords = from_rows(cube_vertices());
  auto faces = faces_from_axes(coords, octa_vertices(), 4);
  return {PolyhedralComplex::build(8, std::move(faces)), std::move(coords)};
}

GeometricPolyhedron make_octahedron() {
  Matrix coords = from_rows(octa_vertices());
  auto faces = faces_from_axes(coords, cube_vertices(), 3);
  return {PolyhedralComplex::build(6, std::move(faces)), std::move(coords)};
}

GeometricPolyhedron make_icosahedron() {
  Matrix coords = from_rows(icosa_vertices());
  auto faces = faces_from_axes(coords, dodeca_vertices(), 3);
  return {PolyhedralComplex::build(12, std::move(faces)), std::move(coords)};
}

GeometricPolyhedron make_dodecahedron() {
  Matrix coords = from_rows(dodeca_vertices());
  auto faces = faces_from_axes(coords, icosa_vertices(), 5);
  return {PolyhedralComplex::build(20, std::move(faces)), std::move(coords)};
}

GeometricPolyhedron make_prism(int n) {
  if (n < 3) throw Error(ErrorKind::UnknownSeed, "prism needs n >= 3");
  const double h = std::sin(std::numbers::pi / n);  // half-height: square sides
  std::vector<Vec3> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    v.push_back({std::cos(a), std::sin(a), -h});
  }
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    v.push_back({std::cos(a), std::sin(a), h});
  }
  std::vector<std::vector<int>> faces;
  std::vector<int> bottom(n), top(n);
  for (int k = 0; k < n; ++k) bottom[k] = n - 1 - k;
  for (int k = 0; k < n; ++k) top[k] = n + k;
  faces.push_back(bottom);
  faces.push_back(top);
  for (int k = 0; k < n; ++k)
    faces.push_back({k, (k + 1) % n, n + (k + 1) % n, n + k});
  return {PolyhedralComplex::build(2 * n, std::move(faces)), from_rows(v)};
}

bool parse_parametric(const std::string& name, const std::string& prefix, int& n) {
  if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  if (name[prefix.size()] != '(' || name.back() != ')') return false;
  const std::string num = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(ch); }))
    return false;
  n = std::stoi(num);
  return true;
}

}  // namespace

GeometricPolyhedron seed_geometry(const std::string& name) {
  if (name == "tetrahedron") return make_tetrahedron();
  if (name == "cube") return make_cube();
  if (name == "octahedron") return make_octahedron();
  if (name == "icosahedron") return make_icosahedron();
  if (name == "dodecahedron") return make_dodecahedron();
  int n = 0;
  if (parse_parametric(name, "prism", n)) return make_prism(n);
  if (parse_parametric(name, "polygon", n))
    throw Error(ErrorKind::UnknownSeed,
                "polygon(n) is a 2D cycle, not a closed surface; use the polygon interface");
  throw Error(ErrorKind::UnknownSeed, "unknown seed '" + name + "'");
}

PolyhedralComplex seed_complex(const std::string& name) {
  return seed_geometry(name).complex;
}

bool is_known_seed(const std::string& name) {
  int n = 0;
  return name == "tetrahedron" || name == "cube" || name == "octahedron" ||
         name == "icosahedron" || name == "dodecahedron" ||
         (parse_parametric(name, "prism", n) && n >= 3);
}

Matrix polygon_coords(int n) {
  if (n < 3) throw Error(ErrorKind::ValidationError, "polygon needs n >= 3");
  Matrix m(n, 2);
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    m(k, 0) = std::cos(a);
    m(k, 1) = std::sin(a);
  }
  return m;
}

GeometricPolyhedron regular_truncated_cube() {
  // the per-vertex rule in conway_apply gives t = 1/(2 + sqrt 2) on the cube
  return conway_apply(ConwayOp::Truncate, make_cube());
}

GeometricPolyhedron catalan_pentakis_dodecahedron() {
  GeometricPolyhedron dodeca = make_dodecahedron();
  PolyhedralComplex complex = conway_apply(ConwayOp::Kis, dodeca.complex);
  Matrix coords(32, 3);
  const double base_scale = 1.0 / (kPhi * kPhi);
  for (int v = 0; v < 20; ++v) coords.set_row3(v, dodeca.coords.row3(v) * base_scale);
  const double apex_scale = 3.0 / (3.0 * kPhi + 4.0);
  const Matrix icosa = from_rows(icosa_vertices());
  for (int f = 0; f < 12; ++f) {
    // the face axis of dodecahedron face f is the icosahedron vertex with the
    // largest dot product against the face centroid
    Vec3 centroid{0, 0, 0};
    for (int v : dodeca.complex.faces()[f]) centroid += dodeca.coords.row3(v);
    int best = 0;
    double best_dot = -1e300;
    for (int k = 0; k < 12; ++k) {
      const double d = dot(icosa.row3(k), centroid);
      if (d > best_dot) {
        best_dot = d;
        best = k;
      }
    }
    coords.set_row3(20 + f, icosa.row3(best) * apex_scale);
  }
  return {std::move(complex), std::move(coords)};
}

}  // namespace buffon
