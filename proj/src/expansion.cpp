#include "betashift/expansion.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "betashift/error.hpp"

namespace betashift {

std::string ExpansionStatus::to_string() const {
  switch (kind) {
    case Kind::kFinite:
      return "Finite{" + std::to_string(k) + "}";
    case Kind::kEventuallyPeriodic:
      return "EventuallyPeriodic{" + std::to_string(n) + "," + std::to_string(p) + "}";
    case Kind::kTruncated:
      return "Truncated{" + std::to_string(max_digits) + "}";
  }
  return {};
}

namespace {

Digit to_digit(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<Digit>::max()) {
    throw Error(ErrorCode::kDigitOverflow, "digit " + x.str() + " does not fit in 32 bits");
  }
  return static_cast<Digit>(x);
}

// One greedy step: returns x = floor(beta r) and replaces r by beta r - x.
Digit step(NumberField& field, FieldElement& r) {
  FieldElement t = field.times_generator(r);
  BigInt x = field.floor(t);
  r = field.subtract(t, field.from_integer(x));
  return to_digit(x);
}

}  // namespace

ExpansionResult beta_expansion_of_one(const AlgebraicNumber& beta, std::size_t max_digits) {
  if (max_digits == 0) {
    throw Error(ErrorCode::kPrecondition, "max_digits must be positive");
  }
  NumberField field(beta);
  ExpansionResult result;
  FieldElement r = field.from_integer(1);
  result.remainders.push_back(r);
  // Remainders lie in [0, 1); they are bucketed by a coarse approximation
  // of their value and compared exactly within neighbouring buckets.
  const Rational width(1, 1 << 16);
  auto bucket = [&](const FieldElement& x) {
    return floor_of(field.enclosure(x, width).lo / width);
  };
  std::map<BigInt, std::vector<std::size_t>> buckets;
  buckets[bucket(r)].push_back(0);

  auto finish = [&](ExpansionStatus status) {
    for (FieldElement& x : result.remainders) x = field.normalize(x);
    result.status = status;
    return result;
  };

  for (std::size_t i = 1; i <= max_digits; ++i) {
    result.digits.push_back(step(field, r));
    if (field.sign(r) == 0) {
      result.remainders.push_back(field.from_integer(0));
      return finish(ExpansionStatus::finite(i));
    }
    r = field.normalize(r);
    result.remainders.push_back(r);

    const BigInt key = bucket(r);
    std::optional<std::size_t> match;
    for (BigInt k = key - 1; k <= key + 1 && !match; ++k) {
      auto it = buckets.find(k);
      if (it == buckets.end()) continue;
      for (std::size_t j : it->second) {
        if (field.sign(field.subtract(r, result.remainders[j])) == 0) {
          match = j;
          break;
        }
      }
    }
    if (!match) {
      buckets[key].push_back(i);
      continue;
    }

    const std::size_t n = *match;
    const std::size_t p = i - n;
    // The remainder determines every later digit; confirm by running on.
    FieldElement probe = r;
    for (std::size_t j = 0; j < 2 * p; ++j) {
      Digit d = step(field, probe);
      if (d != result.digits[n + j % p]) {
        throw Error(ErrorCode::kPrecondition, "periodicity check failed at digit " +
                                                  std::to_string(i + j + 1));
      }
    }
    if (field.sign(field.subtract(probe, r)) != 0) {
      throw Error(ErrorCode::kPrecondition, "remainder did not recur after period check");
    }
    return finish(ExpansionStatus::periodic(n, p));
  }
  return finish(ExpansionStatus::truncated(max_digits));
}

GeneratingSequence generating_sequence_from_expansion(const ExpansionResult& e) {
  using Kind = ExpansionStatus::Kind;
  switch (e.status.kind) {
    case Kind::kTruncated:
      throw Error(ErrorCode::kTruncated,
                  "expansion truncated after " + std::to_string(e.status.max_digits) +
                      " digits; beta may not be sofic");
    case Kind::kFinite: {
      Word period(e.digits.begin(), e.digits.begin() + static_cast<std::ptrdiff_t>(e.status.k));
      period.back() -= 1;
      return validate_generating(EventuallyPeriodicSeq({}, std::move(period)));
    }
    case Kind::kEventuallyPeriodic: {
      auto split = e.digits.begin() + static_cast<std::ptrdiff_t>(e.status.n);
      Word pre(e.digits.begin(), split);
      Word per(split, split + static_cast<std::ptrdiff_t>(e.status.p));
      return validate_generating(EventuallyPeriodicSeq(std::move(pre), std::move(per)));
    }
  }
  throw Error(ErrorCode::kPrecondition, "unknown expansion status");
}

IntPoly generating_polynomial(const GeneratingSequence& g) {
  // x^n (x^p - 1) - [(x^p - 1) sum_{i<=n} g_i x^{n-i} + sum_{j<=p} g_{n+j} x^{p-j}]
  const std::size_t n = g.n();
  const std::size_t p = g.p();
  IntPoly poly(n + p + 1);
  poly[n + p] += 1;
  poly[n] -= 1;
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt gi = g.at(i - 1);
    poly[n - i + p] -= gi;
    poly[n - i] += gi;
  }
  for (std::size_t j = 1; j <= p; ++j) poly[p - j] -= BigInt(g.at(n + j - 1));
  trim(poly);
  return poly;
}

namespace {

// Bisects f on (lo, hi] where f(lo) < 0 < f(hi) until the width is at most
// width, or returns a degenerate interval at an exact root.
RationalInterval bisect_root(const IntPoly& f, Rational lo, Rational hi, const Rational& width,
                             bool require_lo_above_one) {
  if (evaluate(f, hi) == 0) return {hi, hi};
  if (evaluate(f, lo).sign() >= 0 || evaluate(f, hi).sign() <= 0) {
    throw Error(ErrorCode::kPrecondition, "generating polynomial does not bracket beta");
  }
  while (hi - lo > width || (require_lo_above_one && lo <= 1)) {
    Rational mid = (lo + hi) / 2;
    int s = evaluate(f, mid).sign();
    if (s == 0) return {mid, mid};
    if (s < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

RationalInterval beta_from_generating(const GeneratingSequence& g, const Rational& precision) {
  if (precision <= 0) {
    throw Error(ErrorCode::kPrecondition, "precision must be positive");
  }
  // P(1) = -S < 0 and beta <= g_1 + 1.
  return bisect_root(generating_polynomial(g), Rational(1), Rational(g.at(0) + 1), precision,
                     false);
}

AlgebraicNumber beta_algebraic(const GeneratingSequence& g) {
  IntPoly m = squarefree_part(generating_polynomial(g));
  if (m.back() < 0) {
    for (BigInt& c : m) c = -c;
  }
  // m has the same sign pattern as P on (1, inf): negative below beta.
  RationalInterval iv = bisect_root(m, Rational(1), Rational(g.at(0) + 1), Rational(1, 4), true);
  if (iv.lo == iv.hi) return AlgebraicNumber::rational(iv.lo);
  RatPoly mr = to_rational(m);
  while (count_real_roots(mr, iv.lo, iv.hi) != 1) {
    iv = bisect_root(m, iv.lo, iv.hi, iv.width() / 2, true);
    if (iv.lo == iv.hi) return AlgebraicNumber::rational(iv.lo);
  }
  return AlgebraicNumber::from_polynomial(std::move(m), iv);
}

std::pair<double, double> entropy(const GeneratingSequence& g, const Rational& precision) {
  RationalInterval iv = beta_from_generating(g, precision);
  double lo = std::log(iv.lo.convert_to<double>());
  double hi = std::log(iv.hi.convert_to<double>());
  return {std::nextafter(std::nextafter(lo, -INFINITY), -INFINITY),
          std::nextafter(std::nextafter(hi, INFINITY), INFINITY)};
}

}  // namespace betashift
