#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mbfun {

// Exact rationals.  mpq_class keeps values canonical (lowest terms, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with q >= 1 always written, e.g. "-1/1", "2/3".
std::string to_pq_string(const Rational& r);

// Human form: "-1", "2/3".
std::string to_display_string(const Rational& r);

// Accepts "p", "p/q", optional leading sign.  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// floor(r) as an Integer.
Integer floor(const Rational& r);

// r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace mbfun
