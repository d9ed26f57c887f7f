#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "gtj/rational.hpp"

namespace gtj {

/// Complex number with exact rational real and imaginary parts.
/// 0 + 0i is the unique zero; components are stored verbatim, an exact zero
/// component is never folded away.
struct GaussianRational {
    Rational re{};
    Rational im{};

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = Rational(0))
        : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x);
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator*(const GaussianRational& x, const Rational& s);
GaussianRational operator*(const Rational& s, const GaussianRational& x);

/// Exact quotient via the conjugate; throws DivisionByZero when y == 0.
GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator/(const GaussianRational& x, const Rational& s);

GaussianRational& operator+=(GaussianRational& x, const GaussianRational& y);

GaussianRational conj(const GaussianRational& x);

/// re^2 + im^2.
Rational norm2(const GaussianRational& x);

/// k-th power by binary exponentiation, with the 0^0 = 1 convention.
GaussianRational pow(const GaussianRational& x, std::uint64_t k);

inline GaussianRational imaginary_unit() { return GaussianRational{0, 1}; }

/// Canonical literal form: "re", "im i" or "re+im i" without the space,
/// a unit imaginary part printed bare ("i", "1+i", "3-1/2i").
std::string to_string(const GaussianRational& x);

/// Parses the forms produced by to_string plus tolerant variants
/// ("1+1i", "2*i", whitespace). Throws ParseError.
GaussianRational parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace gtj
