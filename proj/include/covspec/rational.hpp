#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covspec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws
/// ValidationError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Decimal rendering with a fixed number of significant digits.
std::string to_decimal(double value, int significant_digits = 12);

}  // namespace covspec
