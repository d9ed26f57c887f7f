#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gtj {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. cpp_rational keeps the canonical form we rely on
/// everywhere: lowest terms, denominator > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// num/den; throws DivisionByZero when den == 0.
Rational make_rational(BigInt num, BigInt den);

/// 2^n as an exact rational, defined for negative n as well.
Rational pow2(std::int64_t n);

/// k-th power with the 0^0 = 1 convention.
Rational rational_pow(const Rational& base, std::uint64_t k);

/// Text form: "p" for integers, "p/q" otherwise, sign up front.
std::string to_string(const Rational& r);

/// Inverse of to_string; tolerates surrounding whitespace and a leading '+'.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace gtj
