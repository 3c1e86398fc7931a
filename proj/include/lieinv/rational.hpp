#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lieinv {

// Arbitrary precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with optional sign. Throws InvalidRational on a zero
// denominator or malformed text.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace lieinv
