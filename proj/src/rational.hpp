#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace freespace {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal like "-1.25" / "3e2" into an exact rational.
/// Decimal text is expanded exactly (so "0.1" becomes 1/10).
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& value);

/// Exact value of the IEEE double (doubles are dyadic rationals).
Rational rational_from_double_exact(double value);

/// Exact rational for the shortest decimal string that round-trips `value`.
/// This recovers 1/10 from 0.1 instead of the dyadic 3602879701896397/2^55.
Rational rational_from_double_decimal(double value);

double to_double(const Rational& value);

/// floor(value) as an arbitrary-precision integer.
mpz_class rational_floor(const Rational& value);

}  // namespace freespace
