#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace horadyn {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// base^exp for a non-negative exponent, exact.
Rational pow(const Rational& base, unsigned long exp);

/// base^exp for any integer exponent; throws ZeroDenominator for 0^negative.
Rational pow(const Rational& base, long exp);

/// Parses "7", "-3/4", "0.125", "1.5e-3". Decimal forms are converted
/// exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Nearest double (ties resolved by the underlying conversion); huge
/// magnitudes saturate to +-inf.
double to_double(const Rational& value);

/// Exact rational value of a finite double.
Rational from_double(double value);

int sign(const Rational& value);

}  // namespace horadyn
