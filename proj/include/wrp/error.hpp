#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wrp {

enum class ErrorCode {
  DegenerateRectangle,
  SourceAtCorner,
  WeightOutOfRange,
  DegeneratePolyline,
  TypeNotAdmissible,
  RootSolveFailure,
  NoFeasibleType,
  RightEdgeInteraction,
  SourceOutsideUnsupported,
  SourceNotOnBoundary,
  SourceNotInside,
  PairNotInCatalog,
  EmptyBbox,
  VertexOffEdge,
  LeadingCoefficientVanishes,
  NotSquarefree,
  InvalidModulus,
  DomainViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateRectangle: return "DegenerateRectangle";
    case ErrorCode::SourceAtCorner: return "SourceAtCorner";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::DegeneratePolyline: return "DegeneratePolyline";
    case ErrorCode::TypeNotAdmissible: return "TypeNotAdmissible";
    case ErrorCode::RootSolveFailure: return "RootSolveFailure";
    case ErrorCode::NoFeasibleType: return "NoFeasibleType";
    case ErrorCode::RightEdgeInteraction: return "RightEdgeInteraction";
    case ErrorCode::SourceOutsideUnsupported: return "SourceOutsideUnsupported";
    case ErrorCode::SourceNotOnBoundary: return "SourceNotOnBoundary";
    case ErrorCode::SourceNotInside: return "SourceNotInside";
    case ErrorCode::PairNotInCatalog: return "PairNotInCatalog";
    case ErrorCode::EmptyBbox: return "EmptyBbox";
    case ErrorCode::VertexOffEdge: return "VertexOffEdge";
    case ErrorCode::LeadingCoefficientVanishes: return "LeadingCoefficientVanishes";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::DomainViolation: return "DomainViolation";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace wrp
