#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace arrhom {

using Int = boost::multiprecision::mpz_int;

// Exact rational scalar. All arithmetic in the library is over Q; nothing
// is ever rounded. Values are kept canonical (reduced, positive denominator)
// by GMP as long as they are constructed through arithmetic -- parse_rational
// canonicalises explicitly since the raw string constructor does not.
using Rational = boost::multiprecision::mpq_rational;

// Parses "p/q" or "p" (optional leading '-'); result is reduced.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// "p/q" with q > 1, otherwise just "p".
std::string rational_to_string(const Rational& r);

}  // namespace arrhom
