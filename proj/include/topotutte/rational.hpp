#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace topotutte {

// Exact rational numbers. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

// Exact square root of a non-negative rational square, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& value);

// value^exponent for a signed integer exponent; throws std::domain_error on 0^negative.
Rational power(const Rational& value, long exponent);

}  // namespace topotutte
