#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace extfair {

// Exact arbitrary-precision fraction; the only numeric type used by the
// library. Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "-40", "3/1000", and exact decimal strings such as "0.0001"
// (parsed as 1/10000, never rounded). Throws Error(Errc::Parse) otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline int sgn(const Rational& q) { return q.sign(); }

}  // namespace extfair
