#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace splitcubic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "-6", "1/3", "+4/-8" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace splitcubic
