#include "gtj/genfunc.hpp"

#include "gtj/errors.hpp"

namespace gtj {

std::array<GaussianRational, 3> numerator_poly(const SeedTriple& s) {
    const Rational& a = s.a;
    const Rational& b = s.b;
    const Rational& c = s.c;
    return {GaussianRational{a, (c - b - a) / 2},
            GaussianRational{b - a, (3 * a + b - c) / 2},
            GaussianRational{c - b - a, -((a - 3 * b + c) / 2)}};
}

SeriesExpansion expand(const SeedTriple& s, std::size_t count) {
    if (count < 1) {
        throw BadRange("series length must be at least 1");
    }
    const auto num = numerator_poly(s);
    SeriesExpansion out{s, {}};
    out.coefficients.reserve(count);
    // Long division by 1 - x - x^2 - 2x^3:
    // c(k) = c(k-1) + c(k-2) + 2 c(k-3) + numerator coefficient k.
    for (std::size_t k = 0; k < count; ++k) {
        GaussianRational ck = k < 3 ? num[k] : GaussianRational{};
        if (k >= 1) {
            ck += out.coefficients[k - 1];
        }
        if (k >= 2) {
            ck += out.coefficients[k - 2];
        }
        if (k >= 3) {
            ck += Rational(2) * out.coefficients[k - 3];
        }
        out.coefficients.push_back(std::move(ck));
    }
    return out;
}

}  // namespace gtj
