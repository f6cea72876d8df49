#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bqp {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;

/// Parses `[+-]digits`, `[+-]digits.digits` or `[+-]digits/digits`.
/// Throws std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(std::string_view token);

/// Canonical exact text: `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& value);

/// Short decimal approximation, for human-readable reports only.
std::string to_decimal(const Rational& value, int significant = 10);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace bqp
