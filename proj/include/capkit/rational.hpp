#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace capkit {

/// Arbitrary-precision integer, GMP backed.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses `p/q` or `p` (optional leading '-', decimal digits only, q > 0).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical form: `p/q` reduced with q > 1, or `p` for integers.
std::string to_string(const Rational& value);

/// Largest integer not exceeding `value`.
Integer floor(const Rational& value);

/// floor(value) as int64; throws std::out_of_range if it does not fit.
std::int64_t floor_to_int64(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace capkit
