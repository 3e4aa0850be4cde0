#pragma once

// Eventually periodic digit sequences b p^inf and the lexicographic machinery
// used to decide membership in a beta-shift.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betashift {

using Digit = std::uint32_t;
using Word = std::vector<Digit>;

// Renders a word with single characters for digits below 10 and "[d]" for
// larger digits, e.g. {1, 12, 0} -> "1[12]0".
std::string format_word(std::span<const Digit> word);

// Parses the inverse of format_word. An empty string yields an empty word.
Word parse_word(std::string_view text);

// The infinite sequence preperiod . period . period . ...
// The representation is not required to be minimal; see normalize().
class EventuallyPeriodicSeq {
 public:
  EventuallyPeriodicSeq(Word preperiod, Word period);

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period_length() const { return period_.size(); }

  // Digit at zero-based position i of the infinite sequence.
  Digit at(std::size_t i) const;
  Word prefix(std::size_t length) const;
  Digit max_digit() const;

  // "b(p)" in the text grammar, e.g. "11(10)".
  std::string to_string() const;

  // Representation equality. Use lex_compare for sequence equality.
  bool operator==(const EventuallyPeriodicSeq&) const = default;

 private:
  Word preperiod_;
  Word period_;
};

// seq := word | word? '(' word ')'. A bare word (no period) is rejected.
EventuallyPeriodicSeq parse_sequence(std::string_view text);

// Same infinite sequence with a primitive period and minimal preperiod.
EventuallyPeriodicSeq normalize(const EventuallyPeriodicSeq& s);

// Drops the first k digits; the result is normalized.
EventuallyPeriodicSeq shift(const EventuallyPeriodicSeq& s, std::size_t k);

// Lexicographic order on the infinite sequences.
std::strong_ordering lex_compare(const EventuallyPeriodicSeq& a,
                                 const EventuallyPeriodicSeq& b);

// A normalized sequence that satisfies the generating-sequence criterion:
// every shift is lexicographically <= the sequence and the period has a
// nonzero digit. Only validate_generating constructs one.
class GeneratingSequence {
 public:
  const EventuallyPeriodicSeq& seq() const { return seq_; }
  const Word& preperiod() const { return seq_.preperiod(); }
  const Word& period() const { return seq_.period(); }
  std::size_t n() const { return seq_.preperiod_length(); }
  std::size_t p() const { return seq_.period_length(); }
  Digit at(std::size_t i) const { return seq_.at(i); }
  Digit max_digit() const { return seq_.max_digit(); }
  bool is_binary() const { return max_digit() <= 1; }
  std::string to_string() const { return seq_.to_string(); }

  bool operator==(const GeneratingSequence&) const = default;

  // parse_sequence followed by validate_generating.
  static GeneratingSequence parse(std::string_view text);

 private:
  friend GeneratingSequence validate_generating(const EventuallyPeriodicSeq& s);
  explicit GeneratingSequence(EventuallyPeriodicSeq seq) : seq_(std::move(seq)) {}

  EventuallyPeriodicSeq seq_;
};

// Throws Error{kViolatingShift, index = k} for the least offending shift k,
// or Error{kAllZeroPeriod}.
GeneratingSequence validate_generating(const EventuallyPeriodicSeq& s);

// Parry's criterion: every proper shift is strictly below the sequence.
bool validate_expansion(const EventuallyPeriodicSeq& s);

// Membership of w in the language of the beta-shift generated by g: every
// suffix of w is <= the prefix of g of the same length. Equality is
// admissible because w 0^inf is then still <= g.
bool is_factor(std::span<const Digit> w, const GeneratingSequence& g);

enum class ShiftClass { kSft, kStrictlySofic };

std::string_view to_string(ShiftClass c);

// SFT iff g is purely periodic.
ShiftClass classify(const GeneratingSequence& g);

}  // namespace betashift
