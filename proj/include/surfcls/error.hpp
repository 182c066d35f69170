#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfcls {

enum class ErrorCode {
  MalformedToken,
  EdgeMultiplicity,
  Disconnected,
  EmptyFaceSet,
  DuplicateFace,
  EdgeNotFound,
  FaceNotFound,
  NameCollision,
  NotContractible,
  BadPosition,
  NotMergeable,
  InternalInvariantViolation,
  Overflow,
  DimensionMismatch,
  DegenerateTriangle,
  InfeasibleInvariants,
  BorderedNotSupported,
  EmptySet,
  UnknownPreset,
  PointOnCurve,
  RefinementLimit,
  InvalidIfs,
  InvalidCurve,
  InvalidScene,
  NotASurface,
  ParseError,
  IoError,
};

// Stable machine-greppable identifier, e.g. "E_EDGE_MULTIPLICITY".
std::string_view error_code_name(ErrorCode code) noexcept;

// Parse/usage class errors map to CLI exit status 2, everything else to 1.
bool is_parse_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfcls
