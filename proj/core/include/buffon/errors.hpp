#pragma once

#include <stdexcept>
#include <string>

namespace buffon {

enum class ErrorKind {
  NonManifoldEdge,
  EulerViolation,
  DegenerateFace,
  Disconnected,
  UnknownSeed,
  NotSimplicial,
  ToleranceAmbiguity,
  NotConvex,
  OriginOutside,
  FaceNotPlanar,
  NoConvergence,
  SearchBudgetExceeded,
  ParseError,
  ValidationError,
  DimensionError,
  SingularFit,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Process exit code for the CLI: 3 for parse errors, 4 for non-convergence,
  // 2 for everything else (validation family).
  int exit_code() const;

 private:
  ErrorKind kind_;
};

}  // namespace buffon
