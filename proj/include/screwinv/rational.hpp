#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace screwinv {

/// Exact rational number. GMP keeps every value in canonical form
/// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts `[-]int` or `[-]int/nat` with nonzero denominator.
/// Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// True iff `q` is the square of a rational; `root` receives the
/// non-negative square root.
bool rational_sqrt(const Rational& q, Rational& root);

double to_double(const Rational& q);

}  // namespace screwinv
