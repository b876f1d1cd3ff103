#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "lexiring/core.hpp"

namespace lexiring {

/// Exact weight values. Homogeneous weights are fractions such as 3/4 and 5/4.
using Rational = boost::rational<std::int64_t>;

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view context) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc{} || ptr != last)
        throw SpecError("expected integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

/// Parses `a/b` or an integer.
inline Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_int(s, s));
    const auto num = detail::parse_int(s.substr(0, slash), s);
    const auto den = detail::parse_int(s.substr(slash + 1), s);
    if (den == 0) throw SpecError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace lexiring
