#pragma once

// Flow-equivalence rewritings of generating sequences, each recorded as a
// replayable Move.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betashift/sequence.hpp"

namespace betashift {

enum class MoveKind { kBinarize, kDeleteZero, kInsertZero, kRotateNormalize, kSftCanonical };

std::string_view to_string(MoveKind kind);

struct Move {
  MoveKind kind;
  // DeleteZero: n. InsertZero: k. RotateNormalize: k, l. SftCanonical: S.
  std::vector<std::pair<std::string, std::int64_t>> params;
  GeneratingSequence before;
  GeneratingSequence after;

  std::int64_t param(std::string_view name) const;
  bool operator==(const Move&) const = default;
};

struct MoveTrace {
  GeneratingSequence start;
  std::vector<Move> moves;

  const GeneratingSequence& end() const { return moves.empty() ? start : moves.back().after; }
  void push(Move move);
  bool operator==(const MoveTrace&) const = default;
};

// The period written as 1^p_1 0^q_1 ... 1^p_m 0^q_m. When the normalized
// period does not start with 1 and end with 0, its leading digits are moved
// into the preperiod until it does.
struct RunLengthForm {
  Word preperiod;
  Word period;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (p_j, q_j)
  std::size_t S_b = 0;  // ones in the preperiod above
  std::size_t S_p = 0;  // ones in the period
};

// Throws Error{kNotBinary}, or Error{kRuleInapplicable} if the period has
// no 0.
RunLengthForm run_length_form(const GeneratingSequence& g);

// Leading run of ones.
std::size_t leading_ones(const GeneratingSequence& g);

// Replaces every digit j by 1^j 0.
Move binarize(const GeneratingSequence& g);

// Deletes the 0 after every occurrence of 1^n, n = leading_ones(g).
Move delete_zero(const GeneratingSequence& g);

// Inserts a 0 after the initial 1^k and after every occurrence of 01^k.
// Requires n/2 < k <= n.
Move insert_zero(const GeneratingSequence& g, std::size_t k);

// 1^E followed by the period rotated to start at block k + 1, where
// E = S_b + l S_p + p_1 + ... + p_k.
Move rotate_normalize(const GeneratingSequence& g, std::size_t k, std::int64_t l);

// (1^S 0)^inf for periodic g.
Move sft_canonical(const GeneratingSequence& g);

// Re-applies the move to move.before; throws Error{kRuleInapplicable} if
// the result differs from move.after.
GeneratingSequence replay(const Move& move);
GeneratingSequence replay(const MoveTrace& trace);

struct CanonicalResult {
  GeneratingSequence form;
  MoveTrace trace;
};

// Binary g only. Periodic g goes to (1^S 0)^inf. Otherwise, among all
// rotate_normalize outputs with exponent in [1, S_p] that are valid, the
// one with the least (period, exponent).
CanonicalResult canonical_form(const GeneratingSequence& g);

}  // namespace betashift
