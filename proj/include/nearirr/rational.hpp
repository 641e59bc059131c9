#ifndef NEARIRR_RATIONAL_HPP
#define NEARIRR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nearirr {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// 0 is canonically 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

/// q^n for n >= 0 by binary exponentiation.
Rational rational_pow(const Rational& q, long long n);

/// "p" when the denominator is 1, "p/q" otherwise. Parseable back exactly.
std::string rational_to_string(const Rational& q);

} // namespace nearirr

#endif
