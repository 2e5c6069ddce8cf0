#include "buffon/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "buffon/errors.hpp"

namespace buffon {

using nlohmann::ordered_json;

std::string format_17g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

ordered_json shape_to_json(const ShapeReport& s) {
  ordered_json j;
  j["star_shaped"] = s.star_shaped;
  j["convex"] = s.convex;
  j["faces_planar"] = s.faces_planar;
  j["max_face_deviation"] = format_17g(s.max_face_deviation);
  if (s.affine_match_residual)
    j["affine_match_residual"] = format_17g(*s.affine_match_residual);
  j["collapse_dim"] = s.collapse_dim;
  return j;
}

ShapeReport shape_from_json(const ordered_json& j) {
  ShapeReport s;
  s.star_shaped = j.at("star_shaped").get<bool>();
  s.convex = j.at("convex").get<bool>();
  s.faces_planar = j.at("faces_planar").get<bool>();
  s.max_face_deviation = std::stod(j.at("max_face_deviation").get<std::string>());
  if (j.contains("affine_match_residual"))
    s.affine_match_residual = std::stod(j.at("affine_match_residual").get<std::string>());
  s.collapse_dim = j.at("collapse_dim").get<int>();
  return s;
}

}  // namespace

std::string RunReport::to_json() const {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input;
  j["vertex_count"] = vertex_count;
  j["edge_count"] = edge_count;
  j["face_count"] = face_count;
  if (steinitz) {
    j["steinitz"] = {{"is_planar", steinitz->is_planar},
                     {"is_3_connected", steinitz->is_3_connected},
                     {"euler_ok", steinitz->euler_ok}};
  }
  if (automorphism_order) j["automorphism_order"] = *automorphism_order;
  if (!spectrum.empty()) {
    ordered_json groups = ordered_json::array();
    for (const auto& entry : spectrum) {
      ordered_json g;
      g["eigenvalue"] = entry.eigenvalue;
      g["multiplicity"] = entry.multiplicity;
      if (entry.exact) g["exact"] = *entry.exact;
      groups.push_back(std::move(g));
    }
    j["spectrum"] = std::move(groups);
  }
  if (subdominant_dimension) j["subdominant_dimension"] = *subdominant_dimension;
  if (shape) j["shape"] = shape_to_json(*shape);
  if (rng_seed) j["rng_seed"] = *rng_seed;
  if (iteration_steps) j["iteration_steps"] = *iteration_steps;
  if (coordinates) j["coordinates"] = *coordinates;
  if (!timings_ms.empty()) {
    ordered_json t;
    for (const auto& [k, v] : timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

RunReport RunReport::from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
  if (!j.contains("schema_version"))
    throw Error(ErrorKind::ValidationError, "report is missing schema_version");
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw Error(ErrorKind::ValidationError, "unsupported report schema version");

  RunReport r;
  r.input = j.value("input", std::string{});
  r.vertex_count = j.value("vertex_count", 0);
  r.edge_count = j.value("edge_count", 0);
  r.face_count = j.value("face_count", 0);
  if (j.contains("steinitz")) {
    SteinitzReport s;
    s.is_planar = j["steinitz"].at("is_planar").get<bool>();
    s.is_3_connected = j["steinitz"].at("is_3_connected").get<bool>();
    s.euler_ok = j["steinitz"].at("euler_ok").get<bool>();
    r.steinitz = s;
  }
  if (j.contains("automorphism_order"))
    r.automorphism_order = j.at("automorphism_order").get<long long>();
  if (j.contains("spectrum")) {
    for (const auto& g : j.at("spectrum")) {
      SpectrumEntry entry;
      entry.eigenvalue = g.at("eigenvalue").get<std::string>();
      entry.multiplicity = g.at("multiplicity").get<int>();
      if (g.contains("exact")) entry.exact = g.at("exact").get<std::string>();
      r.spectrum.push_back(std::move(entry));
    }
  }
  if (j.contains("subdominant_dimension"))
    r.subdominant_dimension = j.at("subdominant_dimension").get<int>();
  if (j.contains("shape")) r.shape = shape_from_json(j.at("shape"));
  if (j.contains("rng_seed")) r.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  if (j.contains("iteration_steps"))
    r.iteration_steps = j.at("iteration_steps").get<long long>();
  if (j.contains("coordinates"))
    r.coordinates = j.at("coordinates").get<std::vector<std::vector<double>>>();
  if (j.contains("timings_ms")) {
    for (const auto& [k, v] : j.at("timings_ms").items())
      r.timings_ms[k] = v.get<double>();
  }
  return r;
}

}  // namespace buffon
