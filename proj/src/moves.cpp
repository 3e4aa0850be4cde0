#include "betashift/moves.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "betashift/error.hpp"

namespace betashift {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kBinarize:
      return "Binarize";
    case MoveKind::kDeleteZero:
      return "DeleteZero";
    case MoveKind::kInsertZero:
      return "InsertZero";
    case MoveKind::kRotateNormalize:
      return "RotateNormalize";
    case MoveKind::kSftCanonical:
      return "SftCanonical";
  }
  return "?";
}

std::int64_t Move::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::kPrecondition, "move has no parameter '" + std::string(name) + "'");
}

void MoveTrace::push(Move move) {
  if (!(move.before == end())) {
    throw Error(ErrorCode::kPrecondition, "move does not start where the trace ends");
  }
  moves.push_back(std::move(move));
}

namespace {

using Emitter = std::function<void(const EventuallyPeriodicSeq&, std::size_t, Word&)>;

// Applies a rule whose output at position i depends on x_{i-lookback..i}.
// From A = n + ceil(lookback / p) p on, that window is periodic, so the
// output is emit(0..A-1) followed by emit(A..A+p-1) repeated.
EventuallyPeriodicSeq apply_local_rule(const EventuallyPeriodicSeq& x, std::size_t lookback,
                                       const Emitter& emit) {
  const std::size_t n = x.preperiod_length();
  const std::size_t p = x.period_length();
  const std::size_t a = n + (lookback + p - 1) / p * p;
  Word pre, per;
  for (std::size_t i = 0; i < a; ++i) emit(x, i, pre);
  for (std::size_t i = a; i < a + p; ++i) emit(x, i, per);
  if (per.empty()) {
    throw Error(ErrorCode::kRuleInapplicable, "rule erases the whole period of " + x.to_string());
  }
  EventuallyPeriodicSeq out(std::move(pre), std::move(per));

  Word direct;
  for (std::size_t i = 0; i < a + 3 * p + lookback; ++i) emit(x, i, direct);
  if (out.prefix(direct.size()) != direct) {
    throw Error(ErrorCode::kPrecondition, "local rule is not period compatible");
  }
  return normalize(out);
}

std::size_t ones(const Word& w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), Digit{1}));
}

std::size_t digit_sum(const Word& w) {
  std::size_t s = 0;
  for (Digit d : w) s += d;
  return s;
}

void require_binary(const GeneratingSequence& g) {
  if (!g.is_binary()) {
    throw Error(ErrorCode::kNotBinary, g.to_string() + " is not over {0,1}; binarize first");
  }
}

void require_strictly_sofic(const GeneratingSequence& g) {
  if (classify(g) != ShiftClass::kStrictlySofic) {
    throw Error(ErrorCode::kNotStrictlySofic, g.to_string() + " is purely periodic");
  }
}

// Validates the rule output and checks that S and the class survive.
Move finish(MoveKind kind, std::vector<std::pair<std::string, std::int64_t>> params,
            const GeneratingSequence& before, const EventuallyPeriodicSeq& raw) {
  std::optional<GeneratingSequence> after;
  try {
    after = validate_generating(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::kRuleInapplicable, std::string(to_string(kind)) + " on " +
                                                  before.to_string() + " gives " +
                                                  raw.to_string() + ", which is invalid: " +
                                                  e.what());
  }
  if (digit_sum(after->period()) != digit_sum(before.period())) {
    throw Error(ErrorCode::kRuleInapplicable, std::string(to_string(kind)) + " on " +
                                                  before.to_string() + " changes S to give " +
                                                  after->to_string());
  }
  if (classify(*after) != classify(before)) {
    throw Error(ErrorCode::kRuleInapplicable,
                std::string(to_string(kind)) + " on " + before.to_string() + " gives " +
                    after->to_string() + ", which is " + std::string(to_string(classify(*after))));
  }
  return Move{kind, std::move(params), before, *after};
}

bool run_of_ones_ending_at(const EventuallyPeriodicSeq& x, std::size_t i, std::size_t len) {
  if (i + 1 < len) return false;
  for (std::size_t j = i + 1 - len; j <= i; ++j) {
    if (x.at(j) != 1) return false;
  }
  return true;
}

}  // namespace

std::size_t leading_ones(const GeneratingSequence& g) {
  std::size_t n = 0;
  while (n < g.n() + g.p() && g.at(n) == 1) ++n;
  return n;
}

RunLengthForm run_length_form(const GeneratingSequence& g) {
  require_binary(g);
  const Word& per = g.period();
  const std::size_t p = per.size();
  std::optional<std::size_t> shift;
  for (std::size_t r = 0; r < p && !shift; ++r) {
    if (per[r] == 1 && per[(r + p - 1) % p] == 0) shift = r;
  }
  if (!shift) {
    throw Error(ErrorCode::kRuleInapplicable, "period of " + g.to_string() + " has no 0");
  }
  RunLengthForm form;
  form.preperiod = g.preperiod();
  form.preperiod.insert(form.preperiod.end(), per.begin(),
                        per.begin() + static_cast<std::ptrdiff_t>(*shift));
  form.period = per;
  std::rotate(form.period.begin(), form.period.begin() + static_cast<std::ptrdiff_t>(*shift),
              form.period.end());
  for (std::size_t i = 0; i < p;) {
    std::size_t ones_run = 0, zeros_run = 0;
    while (i < p && form.period[i] == 1) ++ones_run, ++i;
    while (i < p && form.period[i] == 0) ++zeros_run, ++i;
    form.blocks.emplace_back(ones_run, zeros_run);
  }
  form.S_b = ones(form.preperiod);
  form.S_p = ones(form.period);
  return form;
}

Move binarize(const GeneratingSequence& g) {
  EventuallyPeriodicSeq raw =
      apply_local_rule(g.seq(), 0, [](const EventuallyPeriodicSeq& x, std::size_t i, Word& out) {
        out.insert(out.end(), x.at(i), 1);
        out.push_back(0);
      });
  return finish(MoveKind::kBinarize, {}, g, raw);
}

Move delete_zero(const GeneratingSequence& g) {
  require_strictly_sofic(g);
  require_binary(g);
  const std::size_t n = leading_ones(g);
  EventuallyPeriodicSeq raw = apply_local_rule(
      g.seq(), n, [n](const EventuallyPeriodicSeq& x, std::size_t i, Word& out) {
        if (x.at(i) == 0 && i >= n && run_of_ones_ending_at(x, i - 1, n)) return;
        out.push_back(x.at(i));
      });
  return finish(MoveKind::kDeleteZero, {{"n", static_cast<std::int64_t>(n)}}, g, raw);
}

Move insert_zero(const GeneratingSequence& g, std::size_t k) {
  require_strictly_sofic(g);
  require_binary(g);
  const std::size_t n = leading_ones(g);
  if (2 * k <= n) {
    throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(k) + " must exceed n/2 = " +
                                           std::to_string(n) + "/2");
  }
  if (k > n) {
    throw Error(ErrorCode::kRuleInapplicable, g.to_string() + " does not begin with 1^" +
                                                  std::to_string(k));
  }
  EventuallyPeriodicSeq raw = apply_local_rule(
      g.seq(), k, [k](const EventuallyPeriodicSeq& x, std::size_t i, Word& out) {
        out.push_back(x.at(i));
        if (!run_of_ones_ending_at(x, i, k)) return;
        std::size_t start = i + 1 - k;
        if (start == 0 || x.at(start - 1) == 0) out.push_back(0);
      });
  return finish(MoveKind::kInsertZero, {{"k", static_cast<std::int64_t>(k)}}, g, raw);
}

Move rotate_normalize(const GeneratingSequence& g, std::size_t k, std::int64_t l) {
  require_strictly_sofic(g);
  RunLengthForm form = run_length_form(g);
  const std::size_t m = form.blocks.size();
  if (k < 1 || k > m) {
    throw Error(ErrorCode::kPrecondition,
                "block index k = " + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
  std::int64_t exponent = static_cast<std::int64_t>(form.S_b) +
                          l * static_cast<std::int64_t>(form.S_p);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < k; ++j) {
    exponent += static_cast<std::int64_t>(form.blocks[j].first);
    offset += form.blocks[j].first + form.blocks[j].second;
  }
  if (exponent <= 0) {
    throw Error(ErrorCode::kExponentNotPositive,
                "exponent S_b + l S_p + p_1 + ... + p_k = " + std::to_string(exponent));
  }
  Word period = form.period;
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(offset % period.size()),
              period.end());
  EventuallyPeriodicSeq raw(Word(static_cast<std::size_t>(exponent), 1), std::move(period));
  return finish(MoveKind::kRotateNormalize,
                {{"k", static_cast<std::int64_t>(k)}, {"l", l}}, g, normalize(raw));
}

Move sft_canonical(const GeneratingSequence& g) {
  if (classify(g) != ShiftClass::kSft) {
    throw Error(ErrorCode::kNotSft, g.to_string() + " is not purely periodic");
  }
  const std::size_t s = digit_sum(g.period());
  Word period(s, 1);
  period.push_back(0);
  return finish(MoveKind::kSftCanonical, {{"S", static_cast<std::int64_t>(s)}}, g,
                EventuallyPeriodicSeq({}, std::move(period)));
}

GeneratingSequence replay(const Move& move) {
  std::optional<Move> again;
  switch (move.kind) {
    case MoveKind::kBinarize:
      again = binarize(move.before);
      break;
    case MoveKind::kDeleteZero:
      again = delete_zero(move.before);
      break;
    case MoveKind::kInsertZero:
      again = insert_zero(move.before, static_cast<std::size_t>(move.param("k")));
      break;
    case MoveKind::kRotateNormalize:
      again = rotate_normalize(move.before, static_cast<std::size_t>(move.param("k")),
                               move.param("l"));
      break;
    case MoveKind::kSftCanonical:
      again = sft_canonical(move.before);
      break;
  }
  if (!(again->after == move.after) || !(again->params == move.params)) {
    throw Error(ErrorCode::kRuleInapplicable,
                std::string(to_string(move.kind)) + " on " + move.before.to_string() +
                    " gives " + again->after.to_string() + ", not the recorded " +
                    move.after.to_string());
  }
  return again->after;
}

GeneratingSequence replay(const MoveTrace& trace) {
  GeneratingSequence at = trace.start;
  for (const Move& move : trace.moves) {
    if (!(move.before == at)) {
      throw Error(ErrorCode::kRuleInapplicable, "trace is broken before " +
                                                    std::string(to_string(move.kind)));
    }
    at = replay(move);
  }
  return at;
}

CanonicalResult canonical_form(const GeneratingSequence& g) {
  require_binary(g);
  MoveTrace trace{g, {}};
  if (classify(g) == ShiftClass::kSft) {
    Move move = sft_canonical(g);
    if (!(move.after == g)) trace.push(std::move(move));
    return {trace.end(), std::move(trace)};
  }

  RunLengthForm form = run_length_form(g);
  const auto s_p = static_cast<std::int64_t>(form.S_p);
  std::optional<Move> best;
  std::int64_t prefix = static_cast<std::int64_t>(form.S_b);
  for (std::size_t k = 1; k <= form.blocks.size(); ++k) {
    prefix += static_cast<std::int64_t>(form.blocks[k - 1].first);
    // The unique l with prefix + l S_p in [1, S_p].
    std::int64_t l = -((prefix - 1) / s_p);
    std::optional<Move> candidate;
    try {
      candidate = rotate_normalize(g, k, l);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRuleInapplicable) throw;
      continue;
    }
    auto key = [](const Move& mv) {
      return std::make_pair(mv.after.period(), mv.after.n());
    };
    if (!best || key(*candidate) < key(*best)) best = std::move(candidate);
  }
  if (!best) {
    throw Error(ErrorCode::kRuleInapplicable,
                "no rotation of " + g.to_string() + " gives a valid canonical form");
  }
  if (!(best->after == g)) trace.push(std::move(*best));
  return {trace.end(), std::move(trace)};
}

}  // namespace betashift
