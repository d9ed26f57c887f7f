#include "gtj/gaussian.hpp"

#include <cctype>
#include <ostream>

#include "gtj/errors.hpp"

namespace gtj {

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
}

GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
}

GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussianRational operator*(const GaussianRational& x, const Rational& s) {
    return {x.re * s, x.im * s};
}

GaussianRational operator*(const Rational& s, const GaussianRational& x) { return x * s; }

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    if (y.is_zero()) {
        throw DivisionByZero("division by zero Gaussian rational");
    }
    const Rational n2 = norm2(y);
    const GaussianRational t = x * conj(y);
    return {t.re / n2, t.im / n2};
}

GaussianRational operator/(const GaussianRational& x, const Rational& s) {
    if (s == 0) {
        throw DivisionByZero("division by zero scalar");
    }
    return {x.re / s, x.im / s};
}

GaussianRational& operator+=(GaussianRational& x, const GaussianRational& y) {
    x.re += y.re;
    x.im += y.im;
    return x;
}

GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

Rational norm2(const GaussianRational& x) { return x.re * x.re + x.im * x.im; }

GaussianRational pow(const GaussianRational& x, std::uint64_t k) {
    GaussianRational acc{1, 0};
    GaussianRational sq = x;
    while (k != 0) {
        if (k & 1u) {
            acc = acc * sq;
        }
        k >>= 1u;
        if (k != 0) {
            sq = sq * sq;
        }
    }
    return acc;
}

std::string to_string(const GaussianRational& x) {
    if (x.im == 0) {
        return to_string(x.re);
    }
    std::string out;
    if (x.re != 0) {
        out = to_string(x.re);
        if (x.im > 0) {
            out += '+';
        }
    }
    if (x.im == 1) {
        out += 'i';
    } else if (x.im == -1) {
        out += "-i";
    } else {
        out += to_string(x.im);
        out += 'i';
    }
    return out;
}

GaussianRational parse_gaussian(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ParseError("empty Gaussian literal");
    }

    // Parses "[sign]1", "[sign]p/q", bare "i" variants and "p/q i" with an
    // optional '*' before the i.
    const auto parse_component = [&](std::string_view part, bool imaginary) -> Rational {
        if (!imaginary) {
            return parse_rational(part);
        }
        if (part.empty() || part.back() != 'i') {
            throw ParseError("bad Gaussian literal: '" + std::string(text) + "'");
        }
        part.remove_suffix(1);
        if (!part.empty() && part.back() == '*') {
            part.remove_suffix(1);
        }
        if (part.empty() || part == "+") {
            return Rational(1);
        }
        if (part == "-") {
            return Rational(-1);
        }
        return parse_rational(part);
    };

    // A sign past position 0 separates the real and imaginary components;
    // fraction literals carry no interior signs.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }

    if (split == std::string::npos) {
        if (s.back() == 'i') {
            return GaussianRational{0, parse_component(s, true)};
        }
        return GaussianRational{parse_rational(s), 0};
    }
    const Rational re = parse_rational(std::string_view(s).substr(0, split));
    const Rational im = parse_component(std::string_view(s).substr(split), true);
    return GaussianRational{re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << to_string(x);
}

}  // namespace gtj
