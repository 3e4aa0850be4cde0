#pragma once

#include <vector>

#include "betashift/sequence.hpp"

namespace betashift {

// Every generating sequence with preperiod length <= max_pre, period length
// in 1..max_period and digits <= max_digit, normalized and deduplicated,
// in order of (n, p, text).
std::vector<GeneratingSequence> enumerate_generating(std::size_t max_pre, std::size_t max_period,
                                                     Digit max_digit);

// Twenty fixed sequences, ten periodic and ten not, some non-binary.
const std::vector<GeneratingSequence>& standard_catalog();

}  // namespace betashift
