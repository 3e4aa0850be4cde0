#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace betashift {

enum class ErrorCode {
  kMalformed,
  kEmptyPeriod,
  kDigitOverflow,
  kViolatingShift,
  kAllZeroPeriod,
  kInvalidBeta,
  kTruncated,
  kDepthTooSmall,
  kNotSft,
  kNotStrictlySofic,
  kNotBinary,
  kKTooSmall,
  kExponentNotPositive,
  kRuleInapplicable,
  kPrecondition,
  kOutNeighborhoodMismatch,
  kAmbiguousAmalgamation,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every module. `index()` carries the offending
// position where one exists (e.g. the shift index of ViolatingShift).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::int64_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> index_;
};

}  // namespace betashift
