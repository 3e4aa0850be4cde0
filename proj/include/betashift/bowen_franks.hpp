#pragma once

// Bowen-Franks groups of edge shifts and the period-sum invariants of a
// beta-shift.

#include <optional>
#include <string>
#include <vector>

#include "betashift/integer_matrix.hpp"
#include "betashift/labeled_graph.hpp"
#include "betashift/sequence.hpp"

namespace betashift {

// coker(Id - A) = Z/t_1 + ... + Z/t_k + Z^free_rank, with sign det(Id - A).
struct BowenFranks {
  std::vector<BigInt> torsion;  // divisors > 1, each dividing the next
  std::size_t free_rank = 0;
  int det_sign = 0;

  bool operator==(const BowenFranks&) const = default;

  // Group only, ignoring the determinant sign.
  bool same_group(const BowenFranks& other) const {
    return torsion == other.torsion && free_rank == other.free_rank;
  }

  // e.g. "Z/2 + Z^2", "0" for the trivial group.
  std::string group_string() const;
  // group_string() with the sign, e.g. "-Z/2".
  std::string to_string() const;
};

// Throws Error{kPrecondition} if A is not square.
BowenFranks bowen_franks(const IntegerMatrix& a);

// The group Z/s + Z^free_rank with the given sign.
BowenFranks cyclic_plus_free(const BigInt& s, std::size_t free_rank, int det_sign);

// Edge counts between vertices; labels are forgotten.
IntegerMatrix adjacency_matrix(const LabeledGraph& g);

struct PeriodSums {
  BigInt S;  // digit sum of the period
  BigInt N;  // digit sum of the preperiod
};

PeriodSums period_sum(const GeneratingSequence& g);

struct ClosedFormReport {
  PeriodSums sums;
  BowenFranks bf_fischer;
  BowenFranks expected_fischer;
  std::optional<BowenFranks> bf_fiber;
  std::optional<BowenFranks> expected_fiber;
  // Periodic g: digit sum of the finite expansion of 1, which should be S + 1.
  std::optional<BigInt> expansion_digit_sum;
  bool matches = false;
  std::vector<std::string> mismatches;
};

// BF(Id - A_F) against -Z/S, and for non-periodic g BF(Id - A_P) against
// Z/S + Z^2. For periodic g also expands 1 in base beta and checks that its
// digits sum to S + 1.
ClosedFormReport verify_closed_forms(const GeneratingSequence& g);

}  // namespace betashift
