#pragma once

// Three-valued flow-equivalence comparison of sofic beta-shifts.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "betashift/moves.hpp"
#include "betashift/numeric.hpp"
#include "betashift/sequence.hpp"

namespace betashift {

enum class Outcome { kEquivalent, kDistinct, kUnknown };

std::string_view to_string(Outcome outcome);

struct DistinctWitness {
  std::string invariant;  // "class" or "S"
  std::string value1;
  std::string value2;
  // Set when the invariant is standard theory rather than a computed group
  // (SFT-ness is preserved by flow equivalence).
  bool background_theory = false;
};

struct Verdict {
  Outcome outcome = Outcome::kUnknown;
  BigInt S1;
  BigInt S2;
  ShiftClass class1 = ShiftClass::kSft;
  ShiftClass class2 = ShiftClass::kSft;
  // Equivalent: traces from g1 and g2 to the same sequence.
  std::optional<std::pair<MoveTrace, MoveTrace>> traces;
  std::optional<DistinctWitness> witness;
  // Unknown: the two canonical forms.
  std::optional<std::pair<GeneratingSequence, GeneratingSequence>> reduced_pair;
};

Verdict compare(const GeneratingSequence& g1, const GeneratingSequence& g2);

// S + 1 for periodic g. Throws Error{kNotSft}.
BigInt full_shift_class(const GeneratingSequence& g);

}  // namespace betashift
