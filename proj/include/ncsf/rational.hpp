#pragma once

#include <gmpxx.h>

#include <string>

namespace ncsf {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! as an arbitrary-precision integer.
Integer factorial(unsigned n);

/// Exact "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace ncsf
