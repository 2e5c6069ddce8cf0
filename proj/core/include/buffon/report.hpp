#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "buffon/realization.hpp"
#include "buffon/steinitz.hpp"

namespace buffon {

// Stable JSON report (schema_version 1). Eigenvalues travel as %.17g decimal
// strings so the round-trip is lossless; closed-form generators may attach a
// symbolic rendering as well.
struct SpectrumEntry {
  std::string eigenvalue;            // decimal, 17 significant digits
  int multiplicity = 0;
  std::optional<std::string> exact;  // symbolic form when known
};

struct RunReport {
  static constexpr int kSchemaVersion = 1;

  std::string input;  // seed name, file name, or pipeline descriptor
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  std::optional<SteinitzReport> steinitz;
  std::optional<long long> automorphism_order;
  std::vector<SpectrumEntry> spectrum;
  std::optional<int> subdominant_dimension;
  std::optional<ShapeReport> shape;
  std::optional<std::uint64_t> rng_seed;
  std::optional<long long> iteration_steps;
  // raw vertex coordinates (eigenspace realizations with d != 3 travel here
  // since OFF is 3D only)
  std::optional<std::vector<std::vector<double>>> coordinates;
  std::map<std::string, double> timings_ms;  // filled only when requested

  std::string to_json() const;  // pretty, deterministic key order
  static RunReport from_json(const std::string& text);
};

std::string format_17g(double value);

}  // namespace buffon
