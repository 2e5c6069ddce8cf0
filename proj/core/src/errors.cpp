#include "buffon/errors.hpp"

namespace buffon {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownSeed: return "UnknownSeed";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::ToleranceAmbiguity: return "ToleranceAmbiguity";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::OriginOutside: return "OriginOutside";
    case ErrorKind::FaceNotPlanar: return "FaceNotPlanar";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::SingularFit: return "SingularFit";
  }
  return "Error";
}

int Error::exit_code() const {
  switch (kind_) {
    case ErrorKind::ParseError: return 3;
    case ErrorKind::NoConvergence: return 4;
    default: return 2;
  }
}

}  // namespace buffon
