#pragma once

// Greedy beta-expansion of 1 and the passage between beta and its
// generating sequence.

#include <cstddef>
#include <utility>
#include <vector>

#include "betashift/algebraic.hpp"
#include "betashift/sequence.hpp"

namespace betashift {

struct ExpansionStatus {
  enum class Kind { kFinite, kEventuallyPeriodic, kTruncated };

  Kind kind = Kind::kTruncated;
  std::size_t k = 0;  // Finite: index of the last nonzero digit
  std::size_t n = 0;  // EventuallyPeriodic: preperiod length
  std::size_t p = 0;  // EventuallyPeriodic: period length
  std::size_t max_digits = 0;  // Truncated

  static ExpansionStatus finite(std::size_t k) { return {Kind::kFinite, k, 0, 0, 0}; }
  static ExpansionStatus periodic(std::size_t n, std::size_t p) {
    return {Kind::kEventuallyPeriodic, 0, n, p, 0};
  }
  static ExpansionStatus truncated(std::size_t max) { return {Kind::kTruncated, 0, 0, 0, max}; }

  std::string to_string() const;
  bool operator==(const ExpansionStatus&) const = default;
};

struct ExpansionResult {
  // Finite: a_1..a_k. EventuallyPeriodic: preperiod then one period.
  // Truncated: the max_digits digits computed.
  Word digits;
  ExpansionStatus status;
  // r_0 = 1, r_1, ... in the power basis; one more entry than digits.
  std::vector<FieldElement> remainders;
};

inline constexpr std::size_t kDefaultMaxDigits = 4096;

ExpansionResult beta_expansion_of_one(const AlgebraicNumber& beta,
                                      std::size_t max_digits = kDefaultMaxDigits);

// Throws Error{kTruncated} on a truncated expansion.
GeneratingSequence generating_sequence_from_expansion(const ExpansionResult& e);

// x^n (x^p - 1) (1 - sum g_i x^-i), the cleared form of the defining
// identity. Its unique root above 1 is beta.
IntPoly generating_polynomial(const GeneratingSequence& g);

// Interval of width <= precision containing beta. A degenerate interval
// means beta is that rational exactly.
RationalInterval beta_from_generating(const GeneratingSequence& g, const Rational& precision);

// beta as an exact algebraic number: the squarefree part of
// generating_polynomial with an isolating interval.
AlgebraicNumber beta_algebraic(const GeneratingSequence& g);

// Enclosure of log(beta) in doubles, widened outward.
std::pair<double, double> entropy(const GeneratingSequence& g, const Rational& precision);

}  // namespace betashift
