#include "buffon/conway.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "buffon/errors.hpp"

namespace buffon {

std::optional<ConwayOp> conway_from_name(std::string_view name) {
  if (name == "dual") return ConwayOp::Dual;
  if (name == "kis") return ConwayOp::Kis;
  if (name == "truncate") return ConwayOp::Truncate;
  if (name == "ambo") return ConwayOp::Ambo;
  return std::nullopt;
}

const char* conway_name(ConwayOp op) {
  switch (op) {
    case ConwayOp::Dual: return "dual";
    case ConwayOp::Kis: return "kis";
    case ConwayOp::Truncate: return "truncate";
    case ConwayOp::Ambo: return "ambo";
  }
  return "?";
}

namespace {

std::vector<std::string> carried_labels(const PolyhedralComplex& c) {
  if (!c.labels().empty()) return c.labels();
  std::vector<std::string> labels(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) labels[v] = "v" + std::to_string(v);
  return labels;
}

PolyhedralComplex dual_complex(const PolyhedralComplex& c) {
  std::vector<std::vector<int>> faces;
  faces.reserve(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    std::vector<int> cycle;
    // fan order is counterclockwise around v from outside, so the dual face
    // inherits the outward orientation directly
    for (auto [face, succ] : c.vertex_fan(v)) cycle.push_back(face);
    faces.push_back(std::move(cycle));
  }
  std::vector<std::string> labels(c.face_count());
  for (int f = 0; f < c.face_count(); ++f) labels[f] = "dual:" + std::to_string(f);
  return PolyhedralComplex::build(c.face_count(), std::move(faces), std::move(labels));
}

PolyhedralComplex kis_complex(const PolyhedralComplex& c) {
  std::vector<std::vector<int>> faces;
  faces.reserve(2 * c.edge_count());
  for (int fi = 0; fi < c.face_count(); ++fi) {
    const auto& f = c.faces()[fi];
    const int apex = c.vertex_count() + fi;
    for (std::size_t i = 0; i < f.size(); ++i)
      faces.push_back({f[i], f[(i + 1) % f.size()], apex});
  }
  std::vector<std::string> labels = carried_labels(c);
  for (int fi = 0; fi < c.face_count(); ++fi)
    labels.push_back("kis:" + std::to_string(fi));
  return PolyhedralComplex::build(c.vertex_count() + c.face_count(), std::move(faces),
                                  std::move(labels));
}

// Corner vertex ids for truncate: one per directed edge (v, w), the cut point
// on edge {v,w} at the v end. Ids assigned in face-traversal order.
std::map<std::pair<int, int>, int> corner_ids(const PolyhedralComplex& c) {
  std::map<std::pair<int, int>, int> ids;
  int next = 0;
  for (const auto& f : c.faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      if (ids.emplace(std::make_pair(a, b), next).second) ++next;
      if (ids.emplace(std::make_pair(b, a), next).second) ++next;
    }
  }
  return ids;
}

PolyhedralComplex truncate_complex(const PolyhedralComplex& c) {
  const auto ids = corner_ids(c);
  std::vector<std::vector<int>> faces;
  for (const auto& f : c.faces()) {
    std::vector<int> big;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      big.push_back(ids.at({a, b}));
      big.push_back(ids.at({b, a}));
    }
    faces.push_back(std::move(big));
  }
  for (int v = 0; v < c.vertex_count(); ++v) {
    std::vector<int> cut;
    for (auto [face, succ] : c.vertex_fan(v)) cut.push_back(ids.at({v, succ}));
    faces.push_back(std::move(cut));
  }
  std::vector<std::string> labels(ids.size());
  for (const auto& [key, id] : ids)
    labels[id] = "cut:" + std::to_string(key.first) + ":" + std::to_string(key.second);
  return PolyhedralComplex::build(static_cast<int>(ids.size()), std::move(faces),
                                  std::move(labels));
}

PolyhedralComplex ambo_complex(const PolyhedralComplex& c) {
  std::map<std::pair<int, int>, int> ids;
  for (int e = 0; e < c.edge_count(); ++e) ids[c.edges()[e]] = e;
  auto eid = [&](int a, int b) { return ids.at({std::min(a, b), std::max(a, b)}); };
  std::vector<std::vector<int>> faces;
  for (const auto& f : c.faces()) {
    std::vector<int> cycle;
    for (std::size_t i = 0; i < f.size(); ++i)
      cycle.push_back(eid(f[i], f[(i + 1) % f.size()]));
    faces.push_back(std::move(cycle));
  }
  for (int v = 0; v < c.vertex_count(); ++v) {
    std::vector<int> cycle;
    for (auto [face, succ] : c.vertex_fan(v)) cycle.push_back(eid(v, succ));
    faces.push_back(std::move(cycle));
  }
  std::vector<std::string> labels(c.edge_count());
  for (int e = 0; e < c.edge_count(); ++e)
    labels[e] = "edge:" + std::to_string(c.edges()[e].first) + ":" +
                std::to_string(c.edges()[e].second);
  return PolyhedralComplex::build(c.edge_count(), std::move(faces), std::move(labels));
}

}  // namespace

PolyhedralComplex conway_apply(ConwayOp op, const PolyhedralComplex& complex) {
  switch (op) {
    case ConwayOp::Dual: return dual_complex(complex);
    case ConwayOp::Kis: return kis_complex(complex);
    case ConwayOp::Truncate: return truncate_complex(complex);
    case ConwayOp::Ambo: return ambo_complex(complex);
  }
  throw Error(ErrorKind::ValidationError, "unknown conway operator");
}

namespace {

// Polar point w of a face plane: (w, u_i) = 1 for all face vertices, solved
// through the 3x3 normal equations with a planarity residual check.
Vec3 polar_point(const Matrix& coords, const std::vector<int>& face, int face_index,
                 double planarity_tol = 1e-8) {
  Matrix ata(3, 3);
  std::vector<double> atb(3, 0.0);
  for (int v : face) {
    const Vec3 u = coords.row3(v);
    const double uv[3] = {u.x, u.y, u.z};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) ata(i, j) += uv[i] * uv[j];
      atb[i] += uv[i];
    }
  }
  std::vector<double> w;
  if (!solve_linear(ata, atb, w))
    throw Error(ErrorKind::OriginOutside,
                "face " + std::to_string(face_index) +
                    " plane passes through the origin; no polar point");
  const Vec3 wp{w[0], w[1], w[2]};
  double scale = 0.0;
  for (int v : face) scale = std::max(scale, norm(coords.row3(v)));
  for (int v : face) {
    const double r = dot(wp, coords.row3(v)) - 1.0;
    if (std::abs(r) > planarity_tol * std::max(1.0, norm(wp) * scale))
      throw Error(ErrorKind::FaceNotPlanar,
                  "face " + std::to_string(face_index) +
                      " is not planar: polar residual " + std::to_string(r));
  }
  return wp;
}

}  // namespace

GeometricPolyhedron conway_apply(ConwayOp op, const GeometricPolyhedron& solid) {
  const PolyhedralComplex& c = solid.complex;
  const Matrix& u = solid.coords;
  PolyhedralComplex out = conway_apply(op, c);
  Matrix coords(out.vertex_count(), 3);
  switch (op) {
    case ConwayOp::Dual: {
      for (int f = 0; f < c.face_count(); ++f)
        coords.set_row3(f, polar_point(u, c.faces()[f], f));
      break;
    }
    case ConwayOp::Kis: {
      for (int v = 0; v < c.vertex_count(); ++v) coords.set_row3(v, u.row3(v));
      for (int f = 0; f < c.face_count(); ++f)
        coords.set_row3(c.vertex_count() + f, polar_point(u, c.faces()[f], f));
      break;
    }
    case ConwayOp::Truncate: {
      const auto ids = corner_ids(c);
      // per-vertex cut depth: mean edge length L and mean consecutive fan gap
      // g give t = L / (2L + g), the value that makes all new edges at a
      // uniform corner equal
      std::vector<double> t(c.vertex_count());
      for (int v = 0; v < c.vertex_count(); ++v) {
        const auto fan = c.vertex_fan(v);
        double length_sum = 0.0, gap_sum = 0.0;
        for (std::size_t k = 0; k < fan.size(); ++k) {
          const Vec3 wk = u.row3(fan[k].second);
          const Vec3 wn = u.row3(fan[(k + 1) % fan.size()].second);
          length_sum += norm(wk - u.row3(v));
          gap_sum += norm(wn - wk);
        }
        const double mean_len = length_sum / fan.size();
        const double mean_gap = gap_sum / fan.size();
        t[v] = mean_len / (2.0 * mean_len + mean_gap);
      }
      for (const auto& [key, id] : ids) {
        const Vec3 a = u.row3(key.first), b = u.row3(key.second);
        coords.set_row3(id, a + (b - a) * t[key.first]);
      }
      break;
    }
    case ConwayOp::Ambo: {
      for (int e = 0; e < c.edge_count(); ++e) {
        const auto [a, b] = c.edges()[e];
        coords.set_row3(e, (u.row3(a) + u.row3(b)) * 0.5);
      }
      break;
    }
  }
  return {std::move(out), std::move(coords)};
}

std::vector<KisPyramid> kis_pyramids(const PolyhedralComplex& complex) {
  std::vector<KisPyramid> out;
  if (complex.labels().empty()) return out;
  std::vector<std::vector<int>> neighbors(complex.vertex_count());
  for (auto [a, b] : complex.edges()) {
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }
  for (int v = 0; v < complex.vertex_count(); ++v) {
    if (complex.labels()[v].rfind("kis:", 0) == 0)
      out.push_back({v, neighbors[v]});
  }
  return out;
}

}  // namespace buffon
