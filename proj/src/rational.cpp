#include "l1bar/rational.hpp"

#include <cctype>

namespace l1bar {

std::string to_string(const Rational& r)
{
    return r.str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

}   // namespace l1bar
