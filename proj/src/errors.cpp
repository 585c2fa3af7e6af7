#include "bjorth/errors.hpp"

namespace bjorth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kEmptySum: return "EmptySum";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kNotAPlane: return "NotAPlane";
    case ErrorCode::kNotRadonPlane: return "NotRadonPlane";
    case ErrorCode::kNoBracket: return "NoBracket";
    case ErrorCode::kNotSmooth: return "NotSmooth";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kMonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::kEmptyParts: return "EmptyParts";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kDegenerateSection: return "DegenerateSection";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bjorth
