#include "gtj/rational.hpp"

#include <algorithm>
#include <cctype>

#include "gtj/errors.hpp"

namespace gtj {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    return Rational(std::move(num), std::move(den));
}

Rational pow2(std::int64_t n) {
    const auto shift = static_cast<unsigned>(n < 0 ? -n : n);
    BigInt p = BigInt(1) << shift;
    return n < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational rational_pow(const Rational& base, std::uint64_t k) {
    Rational acc(1);
    Rational sq = base;
    while (k != 0) {
        if (k & 1u) {
            acc *= sq;
        }
        k >>= 1u;
        if (k != 0) {
            sq *= sq;
        }
    }
    return acc;
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ParseError("empty rational literal");
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }

    const std::string_view body = std::string_view(s).substr(pos);
    const std::size_t slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    if (!all_digits(num_part)) {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    BigInt num{std::string(num_part)};
    BigInt den{1};
    if (slash != std::string_view::npos) {
        const std::string_view den_part = body.substr(slash + 1);
        if (!all_digits(den_part)) {
            throw ParseError("bad rational literal: '" + std::string(text) + "'");
        }
        den = BigInt{std::string(den_part)};
        if (den == 0) {
            throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
        }
    }
    if (negative) {
        num = -num;
    }
    return Rational(std::move(num), std::move(den));
}

}  // namespace gtj
