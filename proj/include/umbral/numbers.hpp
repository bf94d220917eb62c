#pragma once

// Exact number types shared by every module.
//
// Int is an arbitrary-precision signed integer; Rat is a rational kept in
// lowest terms with a positive denominator. Both are GMP-backed.

#include <gmpxx.h>

#include <string>

namespace umbral {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// base^exp with 0^0 = 1. Negative bases are exact.
Int ipow(const Int& base, unsigned long exp);
Int ipow(long base, unsigned long exp);

/// Decimal, optional leading minus, no leading zeros.
std::string to_string(const Int& v);

/// "p/q", or bare "p" when q == 1.
std::string to_string(const Rat& v);

/// Decimal rendering of v rounded half away from zero to `digits` places.
std::string to_decimal(const Rat& v, unsigned digits);

/// Parses a base-10 integer. Throws std::invalid_argument on bad input.
Int parse_int(const std::string& text);

}  // namespace umbral
