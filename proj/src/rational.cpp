#include "splitcubic/rational.hpp"

#include "splitcubic/errors.hpp"

#include <cctype>

namespace splitcubic {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer integer_from(std::string_view s)
{
    if (!is_decimal_integer(s))
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return integer_from(text); }

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(integer_from(text));
    Integer num = integer_from(text.substr(0, slash));
    Integer den = integer_from(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& input)
{
    Rational value = input;
    value.canonicalize();
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace splitcubic
