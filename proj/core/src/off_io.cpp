#include "buffon/off_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "buffon/errors.hpp"

namespace buffon {

namespace {

struct LineReader {
  std::istringstream stream;
  int line_number = 0;

  explicit LineReader(const std::string& text) : stream(text) {}

  // next payload line, skipping blanks and comments
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(stream, raw)) {
      ++line_number;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") != std::string::npos) {
        out = raw;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_number) + ": " + what);
  }
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, LineReader& reader) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    reader.fail("bad number '" + t + "'");
  return v;
}

long parse_int(const std::string& t, LineReader& reader) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    reader.fail("bad integer '" + t + "'");
  return v;
}

}  // namespace

OffData parse_off(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) reader.fail("empty input");
  {
    const auto header = tokens(line);
    if (header.size() != 1 || header[0] != "OFF") reader.fail("expected OFF header");
  }
  if (!reader.next(line)) reader.fail("missing counts line");
  const auto counts = tokens(line);
  if (counts.size() != 3) reader.fail("counts line must be 'V F E'");
  const long nv = parse_int(counts[0], reader);
  const long nf = parse_int(counts[1], reader);
  parse_int(counts[2], reader);  // edge count ignored
  if (nv <= 0 || nf <= 0) reader.fail("vertex and face counts must be positive");

  Matrix coords(nv, 3);
  for (long v = 0; v < nv; ++v) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(nv) + " vertex lines");
    const auto t = tokens(line);
    if (t.size() != 3) reader.fail("vertex line needs 3 coordinates");
    for (int c = 0; c < 3; ++c) coords(v, c) = parse_double(t[c], reader);
  }
  std::vector<std::vector<int>> faces;
  for (long f = 0; f < nf; ++f) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(nf) + " face lines");
    const auto t = tokens(line);
    if (t.empty()) reader.fail("empty face line");
    const long k = parse_int(t[0], reader);
    if (k < 3) reader.fail("face needs at least 3 vertices");
    if (static_cast<long>(t.size()) != k + 1) reader.fail("face vertex count mismatch");
    std::vector<int> face;
    for (long i = 1; i <= k; ++i) {
      const long idx = parse_int(t[i], reader);
      if (idx < 0 || idx >= nv) reader.fail("vertex index out of range");
      face.push_back(static_cast<int>(idx));
    }
    faces.push_back(std::move(face));
  }
  if (reader.next(line)) reader.fail("trailing content after the face list");

  return {PolyhedralComplex::build(static_cast<int>(nv), std::move(faces)),
          std::move(coords)};
}

std::string write_off(const Matrix& coords, const PolyhedralComplex& complex) {
  if (coords.cols() != 3)
    throw Error(ErrorKind::DimensionError,
                "OFF export is 3D only (got d=" + std::to_string(coords.cols()) +
                    "); use the JSON report for other dimensions");
  if (static_cast<int>(coords.rows()) != complex.vertex_count())
    throw Error(ErrorKind::ValidationError, "coordinate count does not match complex");
  std::string out = "OFF\n";
  out += std::to_string(complex.vertex_count()) + " " +
         std::to_string(complex.face_count()) + " " +
         std::to_string(complex.edge_count()) + "\n";
  char buf[64];
  for (int v = 0; v < complex.vertex_count(); ++v) {
    for (int c = 0; c < 3; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", coords(v, c));
      out += buf;
      out += c == 2 ? '\n' : ' ';
    }
  }
  for (const auto& f : complex.faces()) {
    out += std::to_string(f.size());
    for (int v : f) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace buffon
