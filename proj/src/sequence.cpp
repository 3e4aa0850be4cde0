#include "betashift/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "betashift/error.hpp"

namespace betashift {

std::string format_word(std::span<const Digit> word) {
  std::string out;
  for (Digit d : word) {
    if (d < 10) {
      out.push_back(static_cast<char>('0' + d));
    } else {
      out += '[' + std::to_string(d) + ']';
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      out.push_back(static_cast<Digit>(c - '0'));
      ++i;
    } else if (c == '[') {
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos || close == i + 1) {
        throw Error(ErrorCode::kMalformed,
                    "unterminated or empty bracketed digit in '" +
                        std::string(text) + "'");
      }
      std::string_view body = text.substr(i + 1, close - i - 1);
      if (!std::all_of(body.begin(), body.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw Error(ErrorCode::kMalformed,
                    "bracketed digit must be a decimal integer: '[" +
                        std::string(body) + "]'");
      }
      Digit value = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorCode::kDigitOverflow,
                    "digit '" + std::string(body) + "' does not fit in 32 bits");
      }
      if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw Error(ErrorCode::kMalformed, "bad digit '" + std::string(body) + "'");
      }
      out.push_back(value);
      i = close + 1;
    } else {
      throw Error(ErrorCode::kMalformed,
                  std::string("unexpected character '") + c + "' in '" +
                      std::string(text) + "'");
    }
  }
  return out;
}

EventuallyPeriodicSeq::EventuallyPeriodicSeq(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw Error(ErrorCode::kEmptyPeriod, "period must be nonempty");
  }
}

Digit EventuallyPeriodicSeq::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word EventuallyPeriodicSeq::prefix(std::size_t length) const {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(at(i));
  return out;
}

Digit EventuallyPeriodicSeq::max_digit() const {
  Digit m = *std::max_element(period_.begin(), period_.end());
  for (Digit d : preperiod_) m = std::max(m, d);
  return m;
}

std::string EventuallyPeriodicSeq::to_string() const {
  return format_word(preperiod_) + '(' + format_word(period_) + ')';
}

EventuallyPeriodicSeq parse_sequence(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kMalformed, "empty sequence text");
  }
  std::size_t open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos) {
      throw Error(ErrorCode::kMalformed, "unbalanced ')' in '" + std::string(text) + "'");
    }
    // Validate the digits first so malformed input is reported as such.
    parse_word(text);
    throw Error(ErrorCode::kMalformed,
                "finite word '" + std::string(text) +
                    "' has no period; write it as word(period)");
  }
  if (text.back() != ')') {
    throw Error(ErrorCode::kMalformed,
                "sequence must end with ')': '" + std::string(text) + "'");
  }
  std::string_view pre = text.substr(0, open);
  std::string_view per = text.substr(open + 1, text.size() - open - 2);
  if (per.find('(') != std::string_view::npos || per.find(')') != std::string_view::npos ||
      pre.find(')') != std::string_view::npos) {
    throw Error(ErrorCode::kMalformed, "nested or repeated parentheses in '" +
                                           std::string(text) + "'");
  }
  Word period = parse_word(per);
  if (period.empty()) {
    throw Error(ErrorCode::kEmptyPeriod, "empty period in '" + std::string(text) + "'");
  }
  return EventuallyPeriodicSeq(parse_word(pre), std::move(period));
}

namespace {

Word primitive_root(const Word& w) {
  const std::size_t p = w.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = w[i] == w[i - d];
    if (repeats) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

}  // namespace

EventuallyPeriodicSeq normalize(const EventuallyPeriodicSeq& s) {
  Word pre = s.preperiod();
  Word per = primitive_root(s.period());
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  return EventuallyPeriodicSeq(std::move(pre), std::move(per));
}

EventuallyPeriodicSeq shift(const EventuallyPeriodicSeq& s, std::size_t k) {
  const std::size_t n = s.preperiod_length();
  if (k <= n) {
    Word pre(s.preperiod().begin() + static_cast<std::ptrdiff_t>(k), s.preperiod().end());
    return normalize(EventuallyPeriodicSeq(std::move(pre), s.period()));
  }
  Word per = s.period();
  std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>((k - n) % per.size()),
              per.end());
  return normalize(EventuallyPeriodicSeq({}, std::move(per)));
}

std::strong_ordering lex_compare(const EventuallyPeriodicSeq& a,
                                 const EventuallyPeriodicSeq& b) {
  // Past max(n_a, n_b) both are periodic with period lcm(p_a, p_b).
  const std::size_t horizon = std::max(a.preperiod_length(), b.preperiod_length()) +
                              std::lcm(a.period_length(), b.period_length());
  for (std::size_t i = 0; i < horizon; ++i) {
    Digit x = a.at(i);
    Digit y = b.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GeneratingSequence GeneratingSequence::parse(std::string_view text) {
  return validate_generating(parse_sequence(text));
}

GeneratingSequence validate_generating(const EventuallyPeriodicSeq& s) {
  EventuallyPeriodicSeq norm = normalize(s);
  const Word& per = norm.period();
  if (std::all_of(per.begin(), per.end(), [](Digit d) { return d == 0; })) {
    throw Error(ErrorCode::kAllZeroPeriod,
                "period of " + norm.to_string() + " has no nonzero digit");
  }
  // Shifts past n repeat with period p, so 1..n+p certifies all of them.
  const std::size_t range = norm.preperiod_length() + norm.period_length();
  for (std::size_t k = 1; k <= range; ++k) {
    if (lex_compare(shift(norm, k), norm) == std::strong_ordering::greater) {
      throw Error(ErrorCode::kViolatingShift,
                  "shift by " + std::to_string(k) + " of " + norm.to_string() +
                      " exceeds the sequence",
                  static_cast<std::int64_t>(k));
    }
  }
  return GeneratingSequence(std::move(norm));
}

bool validate_expansion(const EventuallyPeriodicSeq& s) {
  EventuallyPeriodicSeq norm = normalize(s);
  const std::size_t range = norm.preperiod_length() + norm.period_length();
  for (std::size_t k = 1; k <= range; ++k) {
    if (lex_compare(shift(norm, k), norm) != std::strong_ordering::less) return false;
  }
  return true;
}

bool is_factor(std::span<const Digit> w, const GeneratingSequence& g) {
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t i = start; i < w.size(); ++i) {
      Digit gi = g.at(i - start);
      if (w[i] < gi) break;
      if (w[i] > gi) return false;
    }
  }
  return true;
}

std::string_view to_string(ShiftClass c) {
  return c == ShiftClass::kSft ? "SFT" : "StrictlySofic";
}

ShiftClass classify(const GeneratingSequence& g) {
  return g.n() == 0 ? ShiftClass::kSft : ShiftClass::kStrictlySofic;
}

}  // namespace betashift
