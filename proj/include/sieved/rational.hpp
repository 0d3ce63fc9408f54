#ifndef SIEVED_RATIONAL_HPP
#define SIEVED_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "sieved/errors.hpp"

namespace sieved {

// Ground scalar. mpq_class keeps values canonical (den > 0, gcd = 1)
// after every operation, so equality is structural.
using Rational = mpq_class;

// Parses "p/q" or "p". Rejects anything else (no floating input).
Rational parse_rational(const std::string& s);

// "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& r);

Rational rational_pow(const Rational& base, long e);

} // namespace sieved

#endif
