#include "genmap3/error.hpp"

namespace genmap3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFacetList: return "EmptyFacetList";
    case ErrorCode::RepeatedVertexInFacet: return "RepeatedVertexInFacet";
    case ErrorCode::NegativeLabel: return "NegativeLabel";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::CurveNotInSurface: return "CurveNotInSurface";
    case ErrorCode::OverlappingComponents: return "OverlappingComponents";
    case ErrorCode::ParityCountMismatch: return "ParityCountMismatch";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::NotRankDropOne: return "NotRankDropOne";
    case ErrorCode::DegenerateLocus: return "DegenerateLocus";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error Error::in_stage(std::string_view stage) const {
  std::string msg(what());
  // strip our own "Code: " prefix so it is not repeated
  const auto prefix = std::string(to_string(code_)) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
  return Error(code_, std::string(stage) + ": " + msg);
}

}  // namespace genmap3
