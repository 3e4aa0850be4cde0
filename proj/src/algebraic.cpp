#include "betashift/algebraic.hpp"

#include <algorithm>

#include "betashift/error.hpp"

namespace betashift {

namespace {

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const RatPoly& p : chain) {
    int s = evaluate(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const RatPoly& poly, const Rational& lo, const Rational& hi) {
  std::vector<RatPoly> chain;
  RatPoly p = poly;
  trim(p);
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (degree(chain.back()) > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

AlgebraicNumber AlgebraicNumber::integer(const BigInt& value) {
  return rational(Rational(value));
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& value) {
  if (value <= 1) {
    throw Error(ErrorCode::kInvalidBeta, "beta must exceed 1, got " + value.str());
  }
  // b*x - a, isolated in (value - delta, value + delta) with delta = (value-1)/2.
  IntPoly poly{-boost::multiprecision::numerator(value),
               boost::multiprecision::denominator(value)};
  Rational delta = (value - 1) / 2;
  return AlgebraicNumber(std::move(poly), {value - delta, value + delta});
}

AlgebraicNumber AlgebraicNumber::from_polynomial(IntPoly min_poly, RationalInterval interval) {
  trim(min_poly);
  if (betashift::degree(min_poly) < 1) {
    throw Error(ErrorCode::kInvalidBeta, "defining polynomial must have degree >= 1");
  }
  if (interval.lo <= 1) {
    throw Error(ErrorCode::kInvalidBeta,
                "isolating interval must lie above 1, got lo = " + interval.lo.str());
  }
  if (interval.hi <= interval.lo) {
    throw Error(ErrorCode::kInvalidBeta, "isolating interval is empty");
  }
  RatPoly m = to_rational(min_poly);
  if (betashift::degree(gcd(m, derivative(m))) > 0) {
    throw Error(ErrorCode::kInvalidBeta,
                format_polynomial(min_poly) + " is not squarefree");
  }
  Rational at_lo = evaluate(m, interval.lo);
  Rational at_hi = evaluate(m, interval.hi);
  if (at_lo.sign() * at_hi.sign() >= 0) {
    throw Error(ErrorCode::kInvalidBeta, format_polynomial(min_poly) +
                                             " does not change sign on (" +
                                             interval.lo.str() + ", " + interval.hi.str() + ")");
  }
  if (count_real_roots(m, interval.lo, interval.hi) != 1) {
    throw Error(ErrorCode::kInvalidBeta, format_polynomial(min_poly) +
                                             " has more than one root in (" +
                                             interval.lo.str() + ", " + interval.hi.str() + ")");
  }
  if (min_poly.back() < 0) {
    for (BigInt& c : min_poly) c = -c;
  }
  return AlgebraicNumber(std::move(min_poly), std::move(interval));
}

RationalInterval AlgebraicNumber::refined(const Rational& width) const {
  RatPoly m = to_rational(min_poly_);
  RationalInterval iv = interval_;
  int lo_sign = evaluate(m, iv.lo).sign();
  while (iv.width() > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = evaluate(m, mid).sign();
    if (s == 0) return {mid, mid};
    if (s == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

NumberField::NumberField(const AlgebraicNumber& beta)
    : modulus_(to_rational(beta.min_poly())), interval_(beta.isolating_interval()) {
  Rational lead = modulus_.back();
  for (Rational& c : modulus_) c /= lead;
  if (degree() == 1) exact_ = -modulus_[0];
}

FieldElement NumberField::reduce(RatPoly poly) const {
  trim(poly);
  if (betashift::degree(poly) >= static_cast<int>(degree())) poly = divmod(poly, modulus_).second;
  poly.resize(degree());
  return FieldElement(std::move(poly));
}

FieldElement NumberField::from_integer(const BigInt& value) const {
  RatPoly c(degree());
  c[0] = Rational(value);
  return FieldElement(std::move(c));
}

FieldElement NumberField::generator() const { return reduce(RatPoly{0, 1}); }

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  RatPoly c = a.coords();
  c.resize(std::max(c.size(), b.coords().size()));
  for (std::size_t k = 0; k < b.coords().size(); ++k) c[k] += b.coords()[k];
  return reduce(std::move(c));
}

FieldElement NumberField::subtract(const FieldElement& a, const FieldElement& b) const {
  RatPoly c = a.coords();
  c.resize(std::max(c.size(), b.coords().size()));
  for (std::size_t k = 0; k < b.coords().size(); ++k) c[k] -= b.coords()[k];
  return reduce(std::move(c));
}

FieldElement NumberField::normalize(const FieldElement& a) const { return reduce(a.coords()); }

FieldElement NumberField::multiply(const FieldElement& a, const FieldElement& b) const {
  RatPoly prod(a.coords().size() + b.coords().size());
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords().size(); ++j) {
      prod[i + j] += a.coords()[i] * b.coords()[j];
    }
  }
  return reduce(std::move(prod));
}

FieldElement NumberField::times_generator(const FieldElement& a) const {
  // x * (c_0 + ... + c_{d-1} x^{d-1}); only the top coefficient wraps.
  const std::size_t d = degree();
  if (a.coords().size() != d) {
    RatPoly shifted(a.coords().size() + 1);
    std::copy(a.coords().begin(), a.coords().end(), shifted.begin() + 1);
    return reduce(std::move(shifted));
  }
  RatPoly c(d);
  Rational top = a.coords()[d - 1];
  for (std::size_t k = d - 1; k >= 1; --k) c[k] = a.coords()[k - 1];
  if (d >= 1) c[0] = 0;
  if (top != 0) {
    for (std::size_t k = 0; k < d; ++k) c[k] -= top * modulus_[k];
  }
  return FieldElement(std::move(c));
}

RationalInterval NumberField::enclosure(const FieldElement& a) const {
  if (exact_) {
    Rational v = evaluate(a.coords(), *exact_);
    return {v, v};
  }
  // The interval lies in (1, inf), so x^k is increasing and positive on it.
  Rational lo = 0;
  Rational hi = 0;
  Rational pow_lo = 1;
  Rational pow_hi = 1;
  for (const Rational& c : a.coords()) {
    if (c > 0) {
      lo += c * pow_lo;
      hi += c * pow_hi;
    } else if (c < 0) {
      lo += c * pow_hi;
      hi += c * pow_lo;
    }
    pow_lo *= interval_.lo;
    pow_hi *= interval_.hi;
  }
  return {lo, hi};
}

void NumberField::bisect() {
  Rational mid = (interval_.lo + interval_.hi) / 2;
  int s = evaluate(modulus_, mid).sign();
  if (s == 0) {
    exact_ = mid;
    interval_ = {mid, mid};
    return;
  }
  if (s == evaluate(modulus_, interval_.lo).sign()) {
    interval_.lo = mid;
  } else {
    interval_.hi = mid;
  }
}

int NumberField::sign(const FieldElement& a) {
  if (a.is_zero()) return 0;
  RationalInterval e = enclosure(a);
  if (e.lo > 0) return 1;
  if (e.hi < 0) return -1;
  if (exact_) return 0;  // enclosure is a point and contains 0

  // Exact zero test: roots of gcd(a, m) are roots of m, so a(beta) == 0 iff
  // the gcd changes sign across the isolating interval.
  RatPoly g = gcd(a.coords(), modulus_);
  if (betashift::degree(g) >= 1 &&
      evaluate(g, interval_.lo).sign() * evaluate(g, interval_.hi).sign() < 0) {
    // g is a smaller modulus with the same root; elements reduced by it
    // that vanish at beta become zero.
    if (betashift::degree(g) < static_cast<int>(degree())) {
      modulus_ = std::move(g);
      if (degree() == 1) {
        exact_ = -modulus_[0];
        interval_ = {*exact_, *exact_};
      }
    }
    return 0;
  }
  for (;;) {
    bisect();
    e = enclosure(a);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    if (exact_) return 0;
  }
}

RationalInterval NumberField::enclosure(const FieldElement& a, const Rational& width) {
  RationalInterval e = enclosure(a);
  while (e.width() > width && !exact_) {
    bisect();
    e = enclosure(a);
  }
  return e;
}

BigInt NumberField::floor(const FieldElement& a) {
  BigInt k = floor_of(enclosure(a).lo);
  while (sign(subtract(a, from_integer(k + 1))) >= 0) ++k;
  while (sign(subtract(a, from_integer(k))) < 0) --k;
  return k;
}

}  // namespace betashift
