#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lattice_equiv {

// Expression templates are disabled so that `auto` and temporaries behave like
// plain values; the small-value fast path of cpp_int avoids heap traffic.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int sign(const Integer& x) { return x.sign(); }
inline Integer abs(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // gcd(a, b) >= 0
  Integer s;  // s*a + t*b == g
  Integer t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Floor division and the matching non-negative remainder (b != 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

/// Integer square root: the largest r with r*r <= n (n >= 0).
Integer isqrt(const Integer& n);

/// n/d for any nonzero d (the Boost constructor rejects negative d).
Rational make_rational(Integer n, Integer d);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integer(const Rational& q);

/// Always "p/q", also for integers ("3/1"); used by every JSON writer.
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws LatticeError(ParseError) otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace lattice_equiv
