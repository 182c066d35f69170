#include "surfcls/error.hpp"

namespace surfcls {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "E_MALFORMED_TOKEN";
    case ErrorCode::EdgeMultiplicity: return "E_EDGE_MULTIPLICITY";
    case ErrorCode::Disconnected: return "E_DISCONNECTED";
    case ErrorCode::EmptyFaceSet: return "E_EMPTY_FACE_SET";
    case ErrorCode::DuplicateFace: return "E_DUPLICATE_FACE";
    case ErrorCode::EdgeNotFound: return "E_EDGE_NOT_FOUND";
    case ErrorCode::FaceNotFound: return "E_FACE_NOT_FOUND";
    case ErrorCode::NameCollision: return "E_NAME_COLLISION";
    case ErrorCode::NotContractible: return "E_NOT_CONTRACTIBLE";
    case ErrorCode::BadPosition: return "E_BAD_POSITION";
    case ErrorCode::NotMergeable: return "E_NOT_MERGEABLE";
    case ErrorCode::InternalInvariantViolation: return "E_INTERNAL_INVARIANT";
    case ErrorCode::Overflow: return "E_OVERFLOW";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::DegenerateTriangle: return "E_DEGENERATE_TRIANGLE";
    case ErrorCode::InfeasibleInvariants: return "E_INFEASIBLE_INVARIANTS";
    case ErrorCode::BorderedNotSupported: return "E_BORDERED_NOT_SUPPORTED";
    case ErrorCode::EmptySet: return "E_EMPTY_SET";
    case ErrorCode::UnknownPreset: return "E_UNKNOWN_PRESET";
    case ErrorCode::PointOnCurve: return "E_POINT_ON_CURVE";
    case ErrorCode::RefinementLimit: return "E_REFINEMENT_LIMIT";
    case ErrorCode::InvalidIfs: return "E_INVALID_IFS";
    case ErrorCode::InvalidCurve: return "E_INVALID_CURVE";
    case ErrorCode::InvalidScene: return "E_INVALID_SCENE";
    case ErrorCode::NotASurface: return "E_NOT_A_SURFACE";
    case ErrorCode::ParseError: return "E_PARSE";
    case ErrorCode::IoError: return "E_IO";
  }
  return "E_UNKNOWN";
}

bool is_parse_error(ErrorCode code) noexcept {
  return code == ErrorCode::MalformedToken || code == ErrorCode::ParseError ||
         code == ErrorCode::DuplicateFace || code == ErrorCode::UnknownPreset;
}

}  // namespace surfcls
