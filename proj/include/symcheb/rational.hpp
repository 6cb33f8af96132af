#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symcheb {

// GMP keeps mpq_class canonical (coprime, positive denominator) after every
// arithmetic operation; values built from text go through parse_rational,
// which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or an integer literal. Rejects decimals, empty input and a
/// zero denominator with UsageError.
Rational parse_rational(std::string_view text);

/// Parses "p/q", an integer, or a finite decimal such as "1.25" (exactly, as
/// 5/4). Only float-mode entry points accept decimals.
Rational parse_rational_or_decimal(std::string_view text);

/// Renders in lowest terms as "p/q"; integers keep the "/1".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// value^exponent for any signed exponent; value must be nonzero when
/// exponent < 0.
Rational pow(const Rational& value, long exponent);

Integer binomial(long top, long bottom);

}  // namespace symcheb
