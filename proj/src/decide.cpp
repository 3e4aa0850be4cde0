#include "betashift/decide.hpp"

#include "betashift/bowen_franks.hpp"
#include "betashift/error.hpp"

namespace betashift {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kEquivalent:
      return "Equivalent";
    case Outcome::kDistinct:
      return "Distinct";
    case Outcome::kUnknown:
      return "Unknown";
  }
  return "?";
}

namespace {

// Binarize if needed, then move to the canonical form.
MoveTrace reduce(const GeneratingSequence& g) {
  MoveTrace trace{g, {}};
  if (!g.is_binary()) trace.push(binarize(g));
  CanonicalResult canonical = canonical_form(trace.end());
  for (Move& move : canonical.trace.moves) trace.push(std::move(move));
  return trace;
}

}  // namespace

Verdict compare(const GeneratingSequence& g1, const GeneratingSequence& g2) {
  Verdict v;
  v.S1 = period_sum(g1).S;
  v.S2 = period_sum(g2).S;
  v.class1 = classify(g1);
  v.class2 = classify(g2);

  if (v.class1 != v.class2) {
    v.outcome = Outcome::kDistinct;
    v.witness = DistinctWitness{"class", std::string(to_string(v.class1)),
                                std::string(to_string(v.class2)), true};
    return v;
  }
  if (v.S1 != v.S2) {
    v.outcome = Outcome::kDistinct;
    v.witness = DistinctWitness{"S", v.S1.str(), v.S2.str(), false};
    return v;
  }
  MoveTrace t1 = reduce(g1);
  MoveTrace t2 = reduce(g2);
  if (t1.end() == t2.end()) {
    v.outcome = Outcome::kEquivalent;
    v.traces = std::make_pair(std::move(t1), std::move(t2));
  } else if (v.class1 == ShiftClass::kSft) {
    throw Error(ErrorCode::kPrecondition, "periodic sequences with equal S reduced to " +
                                              t1.end().to_string() + " and " +
                                              t2.end().to_string());
  } else {
    v.outcome = Outcome::kUnknown;
    v.reduced_pair = std::make_pair(t1.end(), t2.end());
  }
  return v;
}

BigInt full_shift_class(const GeneratingSequence& g) {
  if (classify(g) != ShiftClass::kSft) {
    throw Error(ErrorCode::kNotSft, g.to_string() + " is not purely periodic");
  }
  return period_sum(g).S + 1;
}

}  // namespace betashift
