#pragma once

// Exact arithmetic in Q[x]/(m) with a distinguished real root beta of m.
//
// beta is given by an integer polynomial m and a rational interval (lo, hi)
// in which m changes sign and has exactly one real root. Elements are
// rational coordinate vectors in the power basis 1, beta, ..., beta^(d-1).
// Signs are decided exactly: an element q vanishes at beta iff gcd(q, m)
// changes sign on the isolating interval; otherwise the interval is bisected
// until interval evaluation of q excludes zero.

#include <optional>
#include <vector>

#include "betashift/numeric.hpp"
#include "betashift/polynomial.hpp"

namespace betashift {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

class AlgebraicNumber {
 public:
  static AlgebraicNumber integer(const BigInt& value);
  static AlgebraicNumber rational(const Rational& value);

  // Verifies lo > 1, m squarefree, m(lo) * m(hi) < 0 and exactly one real
  // root of m in (lo, hi) (Sturm count). Throws Error{kInvalidBeta}.
  static AlgebraicNumber from_polynomial(IntPoly min_poly, RationalInterval interval);

  const IntPoly& min_poly() const { return min_poly_; }
  const RationalInterval& isolating_interval() const { return interval_; }
  std::size_t degree() const { return min_poly_.size() - 1; }

  // An isolating interval of width <= width (exact point if beta is rational).
  RationalInterval refined(const Rational& width) const;

 private:
  AlgebraicNumber(IntPoly min_poly, RationalInterval interval)
      : min_poly_(std::move(min_poly)), interval_(std::move(interval)) {}

  IntPoly min_poly_;
  RationalInterval interval_;
};

// Number of distinct real roots of a squarefree polynomial in (lo, hi],
// by Sturm's theorem.
int count_real_roots(const RatPoly& poly, const Rational& lo, const Rational& hi);

class FieldElement {
 public:
  explicit FieldElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  bool operator==(const FieldElement&) const = default;
  bool operator<(const FieldElement& other) const { return coords_ < other.coords_; }

 private:
  std::vector<Rational> coords_;
};

// Arithmetic context for Q[x]/(m). Holds a private copy of the isolating
// interval that is narrowed on demand by sign(); one instance per thread.
class NumberField {
 public:
  explicit NumberField(const AlgebraicNumber& beta);

  std::size_t degree() const { return modulus_.size() - 1; }

  FieldElement from_integer(const BigInt& value) const;
  FieldElement generator() const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement subtract(const FieldElement& a, const FieldElement& b) const;
  FieldElement multiply(const FieldElement& a, const FieldElement& b) const;
  FieldElement times_generator(const FieldElement& a) const;

  // Rational enclosure of the real value at the current interval.
  RationalInterval enclosure(const FieldElement& a) const;
  // Narrows the interval until the enclosure is at most width wide.
  RationalInterval enclosure(const FieldElement& a, const Rational& width);

  // Exact sign of the real value of a at beta. A zero found through a
  // proper factor of m replaces m by that factor, so elements created
  // earlier should be passed through normalize().
  int sign(const FieldElement& a);

  // Exact floor of the real value of a at beta.
  BigInt floor(const FieldElement& a);

  const RationalInterval& current_interval() const { return interval_; }

  // a reduced modulo the current modulus.
  FieldElement normalize(const FieldElement& a) const;

 private:
  void bisect();
  FieldElement reduce(RatPoly poly) const;

  RatPoly modulus_;  // monic
  RationalInterval interval_;
  std::optional<Rational> exact_;
};

}  // namespace betashift
