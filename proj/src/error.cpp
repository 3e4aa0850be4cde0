#include "betashift/error.hpp"

namespace betashift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kEmptyPeriod: return "EmptyPeriod";
    case ErrorCode::kDigitOverflow: return "DigitOverflow";
    case ErrorCode::kViolatingShift: return "ViolatingShift";
    case ErrorCode::kAllZeroPeriod: return "AllZeroPeriod";
    case ErrorCode::kInvalidBeta: return "InvalidBeta";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kDepthTooSmall: return "DepthTooSmall";
    case ErrorCode::kNotSft: return "NotSft";
    case ErrorCode::kNotStrictlySofic: return "NotStrictlySofic";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kExponentNotPositive: return "ExponentNotPositive";
    case ErrorCode::kRuleInapplicable: return "RuleInapplicable";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kOutNeighborhoodMismatch: return "OutNeighborhoodMismatch";
    case ErrorCode::kAmbiguousAmalgamation: return "AmbiguousAmalgamation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::int64_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace betashift
