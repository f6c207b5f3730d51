#pragma once

#include <gmpxx.h>

#include <string>

namespace curvinv {

// Exact rational scalar backed by GMP. Canonical at all times: reduced
// fraction, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

// num/den in canonical form; den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace curvinv
