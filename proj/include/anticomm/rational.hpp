#pragma once

// Exact scalar types. Rationals are GMP mpq values, always kept in canonical
// form (reduced, positive denominator, zero as 0/1) by the backend.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace anticomm {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q". Non-reduced input is normalized.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace anticomm
