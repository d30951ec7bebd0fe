#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

// Boost 1.74 recurses forever on `rational == int` under C++20 rewritten
// comparisons. Exact non-template overloads take precedence.
namespace boost {
#define GWIDTH_RATIONAL_EQ(T)                                                                                \
    inline constexpr bool operator==(const rational<std::int64_t>& a, T b)                                   \
    {                                                                                                        \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                        \
    }                                                                                                        \
    inline constexpr bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
GWIDTH_RATIONAL_EQ(int)
GWIDTH_RATIONAL_EQ(long)
GWIDTH_RATIONAL_EQ(long long)
#undef GWIDTH_RATIONAL_EQ
} // namespace boost

namespace gwidth {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;
using RationalPoint = std::vector<Rational>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (is_integral(r))
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string to_string(const RationalPoint& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(p[i]);
    }
    return out + ")";
}

namespace detail {

inline Integer parse_integer(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorCode::InvalidInput, "empty integer");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        throw Error(ErrorCode::InvalidInput, "malformed integer '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw Error(ErrorCode::InvalidInput, "malformed integer '" + std::string(text) + "'");
        if (value > (INT64_MAX - (c - '0')) / 10)
            throw Error(ErrorCode::InvalidInput, "integer out of range '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses "p" or "p/q" (q nonzero). Whitespace around the tokens is ignored.
inline Rational parse_rational(std::string_view text)
{
    text = detail::trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_integer(text));
    Integer num = detail::parse_integer(detail::trim(text.substr(0, slash)));
    Integer den = detail::parse_integer(detail::trim(text.substr(slash + 1)));
    if (den == 0)
        throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

} // namespace gwidth
