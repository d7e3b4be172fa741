#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sugartax {

/// Exact rational number. Every price, coefficient, demand, revenue and tax
/// rate in the solver is one of these; floating point only enters through the
/// logarithm in consumer surplus.
using Rational = mpq_class;

/// num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational ratio(long num, long den);

/// Parses "12", "-0.94", "5.", ".5" or "93/17" exactly. Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Shortest exact text form: a terminating decimal when the denominator is
/// 2^a 5^b ("4.7"), otherwise "p/q" ("93/17"). parse_rational inverts it.
std::string to_exact_string(const Rational& value);

/// Rounds half away from zero to `decimals` fractional digits.
Rational round_to(const Rational& value, int decimals);

/// Fixed-point rendering with exactly `decimals` digits, rounded half away
/// from zero. Never goes through a double.
std::string to_fixed(const Rational& value, int decimals);

double to_double(const Rational& value);

}  // namespace sugartax
