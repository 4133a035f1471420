#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hsc {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering; integers print without a denominator.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// n/d in lowest terms; d must be nonzero.
Rational ratio(const Integer& n, const Integer& d);

Integer factorial(unsigned n);

// gcd with gcd(x, 0) = x.
long gcd_long(long a, long b);

// floor(r) as an Integer.
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

}  // namespace hsc
