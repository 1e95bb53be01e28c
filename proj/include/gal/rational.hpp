#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gal {

/// Arbitrary-precision fraction, always canonical (positive denominator, lowest terms).
using Rational = mpq_class;

/// Parses "a", "a/b" or "-a/b"; throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Smallest integer >= q.
mpz_class ceil(const Rational& q);

} // namespace gal
