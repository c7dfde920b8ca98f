#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace luroth {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& value);

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

/// Small integer power; exponent >= 0.
Rational power(const Rational& base, unsigned exponent);

}  // namespace luroth
