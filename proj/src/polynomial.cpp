#include "betashift/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "betashift/error.hpp"

namespace betashift {

namespace {

BigInt parse_uint(std::string_view text, std::size_t& i) {
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) {
    throw Error(ErrorCode::kMalformed,
                "expected an integer at offset " + std::to_string(start) + " of '" +
                    std::string(text) + "'");
  }
  return BigInt(std::string(text.substr(start, i - start)));
}

}  // namespace

IntPoly parse_polynomial(std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw Error(ErrorCode::kMalformed, "empty polynomial");

  IntPoly poly;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::kMalformed, "expected '+' or '-' in '" + text + "'");
    }
    first = false;

    BigInt coef = 1;
    bool has_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = parse_uint(text, i);
      has_coef = true;
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::size_t power = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        BigInt e = parse_uint(text, i);
        if (e > 4096) throw Error(ErrorCode::kMalformed, "exponent too large");
        power = static_cast<std::size_t>(e);
      }
    } else if (!has_coef) {
      throw Error(ErrorCode::kMalformed, "empty term in '" + text + "'");
    }
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += sign * coef;
  }
  trim(poly);
  if (poly.empty()) throw Error(ErrorCode::kMalformed, "polynomial is zero");
  return poly;
}

std::string format_polynomial(const IntPoly& poly) {
  std::string out;
  for (int k = degree(poly); k >= 0; --k) {
    const BigInt& c = poly[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

int degree(const IntPoly& poly) {
  for (std::size_t k = poly.size(); k-- > 0;) {
    if (poly[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

int degree(const RatPoly& poly) {
  for (std::size_t k = poly.size(); k-- > 0;) {
    if (poly[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

void trim(IntPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

void trim(RatPoly& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

RatPoly to_rational(const IntPoly& poly) {
  RatPoly out;
  out.reserve(poly.size());
  for (const BigInt& c : poly) out.emplace_back(c);
  return out;
}

IntPoly primitive_part(const RatPoly& poly) {
  RatPoly p = poly;
  trim(p);
  if (p.empty()) return {};
  BigInt lcm_den = 1;
  for (const Rational& c : p) {
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  }
  IntPoly out;
  BigInt content = 0;
  for (const Rational& c : p) {
    BigInt v = boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c));
    content = boost::multiprecision::gcd(content, v);
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (BigInt& c : out) c /= content;
  return out;
}

RatPoly derivative(const RatPoly& poly) {
  RatPoly out;
  for (std::size_t k = 1; k < poly.size(); ++k) out.push_back(poly[k] * static_cast<long>(k));
  trim(out);
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  trim(rem);
  RatPoly den = b;
  trim(den);
  if (den.empty()) throw std::invalid_argument("polynomial division by zero");
  const int db = degree(den);
  RatPoly quot;
  while (degree(rem) >= db) {
    const int dr = degree(rem);
    Rational factor = rem[static_cast<std::size_t>(dr)] / den.back();
    const auto shift = static_cast<std::size_t>(dr - db);
    if (quot.size() <= shift) quot.resize(shift + 1);
    quot[shift] += factor;
    for (std::size_t k = 0; k < den.size(); ++k) rem[shift + k] -= factor * den[k];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

Rational evaluate(const RatPoly& poly, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

Rational evaluate(const IntPoly& poly, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

IntPoly squarefree_part(const IntPoly& poly) {
  RatPoly p = to_rational(poly);
  trim(p);
  if (degree(p) <= 0) return primitive_part(p);
  RatPoly g = gcd(p, derivative(p));
  return primitive_part(divmod(p, g).first);
}

}  // namespace betashift
