#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genmap3 {

enum class ErrorCode {
  EmptyFacetList,
  RepeatedVertexInFacet,
  NegativeLabel,
  NotClosed,
  DimensionMismatch,
  DegreeMismatch,
  DegreeOverflow,
  NotACocycle,
  NotACycle,
  NoSolution,
  ContextMismatch,
  CurveNotInSurface,
  OverlappingComponents,
  ParityCountMismatch,
  UnknownSimplex,
  InvalidMap,
  NotRankDropOne,
  DegenerateLocus,
  UnknownBuiltin,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the violated
/// precondition; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// Same code, message prefixed with the name of the failing stage.
  Error in_stage(std::string_view stage) const;

 private:
  ErrorCode code_;
};

}  // namespace genmap3
