#include "lattice_equiv/arith.hpp"

#include "lattice_equiv/error.hpp"

#include <cctype>

namespace lattice_equiv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotConvexPosition: return "NotConvexPosition";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RegionTooLarge: return "RegionTooLarge";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (!y.is_zero()) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a - floor_div(a, b) * b;
  if (r.sign() < 0) r += abs(b);
  return r;
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw LatticeError(ErrorKind::InvalidArgument, "isqrt of a negative number");
  if (n.is_zero()) return 0;
  Integer r = boost::multiprecision::sqrt(n);
  while (r * r > n) r -= 1;
  while ((r + 1) * (r + 1) <= n) r += 1;
  return r;
}

Integer numerator(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
Integer denominator(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }
bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw LatticeError(ErrorKind::ParseError, "empty integer");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw LatticeError(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s);
}

Rational make_rational(Integer n, Integer d) {
  if (d.is_zero()) throw LatticeError(ErrorKind::InvalidArgument, "zero denominator");
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) throw LatticeError(ErrorKind::ParseError, "zero denominator");
  return make_rational(std::move(num), std::move(den));
}

}  // namespace lattice_equiv
