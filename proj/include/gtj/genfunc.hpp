#pragma once

#include <array>
#include <cstddef>

#include "gtj/sequence.hpp"

namespace gtj {

struct SeriesExpansion {
    SeedTriple seed;
    std::vector<GaussianRational> coefficients;  // coefficient k multiplies x^k
};

/// Degree <= 2 numerator of the rational generating function over the
/// denominator 1 - x - x^2 - 2x^3.
std::array<GaussianRational, 3> numerator_poly(const SeedTriple& seed);

/// First `count` power-series coefficients by exact long division; each
/// coefficient equals the corresponding sequence term. Throws BadRange when
/// count == 0.
SeriesExpansion expand(const SeedTriple& seed, std::size_t count);

}  // namespace gtj
