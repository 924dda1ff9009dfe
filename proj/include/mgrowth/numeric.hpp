#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mgrowth {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, std::uint64_t exponent);
Integer ipow(long base, std::uint64_t exponent);

/// base^exponent for a possibly negative exponent.
Rational rpow(long base, std::int64_t exponent);

Integer floor(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational exact_rational(double value);

int sign(const Integer& z);
int sign(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q"; throws ParseError.
Rational parse_rational(std::string_view text);

/// Decimal rendering truncated (toward -inf) to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

/// Checked int64 arithmetic; throws mgrowth::Error on overflow.
std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs);

}  // namespace mgrowth
