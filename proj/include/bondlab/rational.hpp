#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bondlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline auto rational(long long p, long long q = 1) -> Rational
{
    return Rational(BigInt(p), BigInt(q));
}

/// Always "p/q" with q > 0 and gcd(p, q) = 1, e.g. "0/1", "-1/10".
auto to_string(const Rational & r) -> std::string;
auto parse_rational(std::string_view text) -> Rational;

} // namespace bondlab
