#pragma once

// Dense univariate polynomials, coefficients stored lowest degree first.

#include <string>
#include <string_view>
#include <vector>

#include "betashift/numeric.hpp"

namespace betashift {

using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;

// Integer polynomial text such as "x^4-x^3-2x^2+1" or "3*x - 5".
IntPoly parse_polynomial(std::string_view text);
std::string format_polynomial(const IntPoly& poly);

// -1 for the zero polynomial.
int degree(const IntPoly& poly);
int degree(const RatPoly& poly);

void trim(IntPoly& poly);
void trim(RatPoly& poly);

RatPoly to_rational(const IntPoly& poly);

// Clears denominators and content; the leading coefficient is made positive.
IntPoly primitive_part(const RatPoly& poly);

RatPoly derivative(const RatPoly& poly);

// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd; the gcd of two zero polynomials is zero.
RatPoly gcd(RatPoly a, RatPoly b);

Rational evaluate(const RatPoly& poly, const Rational& x);
Rational evaluate(const IntPoly& poly, const Rational& x);

// poly / gcd(poly, poly'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& poly);

}  // namespace betashift
