#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gtj/errors.hpp"
#include "gtj/genfunc.hpp"
#include "test_support.hpp"

using gtj::GaussianRational;
using gtj::Preset;
using gtj::Rational;
using gtj::SeedTriple;
using testutil::frac;

TEST_CASE("numerator polynomials for the presets") {
    const auto jg = gtj::numerator_poly(gtj::preset_seed(Preset::Jg));
    CHECK_EQ(jg[0], GaussianRational{0, 0});
    CHECK_EQ(jg[1], GaussianRational{1, 0});
    CHECK_EQ(jg[2], GaussianRational{0, 1});

    const auto kg = gtj::numerator_poly(gtj::preset_seed(Preset::Kg));
    CHECK_EQ(kg[0], GaussianRational{3, frac(-1, 2)});
    CHECK_EQ(kg[1], GaussianRational{-2, frac(7, 2)});
    CHECK_EQ(kg[2], GaussianRational{-1, frac(-3, 2)});
}

TEST_CASE("numerator coefficients are the recurrence differences") {
    std::mt19937_64 rng(51);
    for (int iter = 0; iter < 30; ++iter) {
        const SeedTriple s = testutil::random_seed(rng);
        const auto num = gtj::numerator_poly(s);
        const auto t = gtj::term_range(s, 0, 2);
        CHECK_EQ(num[0], t[0]);
        CHECK_EQ(num[1], t[1] - t[0]);
        CHECK_EQ(num[2], t[2] - t[1] - t[0]);
    }
}

TEST_CASE("expansion reproduces the tabulated prefixes") {
    const auto jg = gtj::expand(gtj::preset_seed(Preset::Jg), 6);
    const GaussianRational expected[6] = {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {5, 2}, {9, 5}};
    REQUIRE_EQ(jg.coefficients.size(), 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK_EQ(jg.coefficients[k], expected[k]);
    }

    const auto kg = gtj::expand(gtj::preset_seed(Preset::Kg), 3);
    CHECK_EQ(kg.coefficients[0], GaussianRational{3, frac(-1, 2)});
    CHECK_EQ(kg.coefficients[1], GaussianRational{1, 3});
    CHECK_EQ(kg.coefficients[2], GaussianRational{3, 1});

    const auto single = gtj::expand(gtj::preset_seed(Preset::Kg), 1);
    REQUIRE_EQ(single.coefficients.size(), 1);
    CHECK_EQ(single.coefficients[0], GaussianRational{3, frac(-1, 2)});

    CHECK_THROWS_AS(gtj::expand(gtj::preset_seed(Preset::Jg), 0), gtj::BadRange);
}

TEST_CASE("every coefficient equals the recurrence term") {
    std::mt19937_64 rng(52);
    for (int iter = 0; iter < 20; ++iter) {
        const SeedTriple s = testutil::random_seed(rng);
        const auto series = gtj::expand(s, 64);
        const auto oracle = gtj::term_range(s, 0, 63);
        for (std::size_t k = 0; k < 64; ++k) {
            CHECK_EQ(series.coefficients[k], oracle[k]);
        }
    }
}

TEST_CASE("multiplying back by the denominator recovers the numerator") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        const SeedTriple s = testutil::random_seed(rng);
        const auto series = gtj::expand(s, 40);
        const auto& c = series.coefficients;
        const auto num = gtj::numerator_poly(s);
        for (std::size_t k = 0; k < c.size(); ++k) {
            GaussianRational back = c[k];
            if (k >= 1) {
                back = back - c[k - 1];
            }
            if (k >= 2) {
                back = back - c[k - 2];
            }
            if (k >= 3) {
                back = back - Rational(2) * c[k - 3];
            }
            CHECK_EQ(back, k < 3 ? num[k] : GaussianRational{});
        }
    }
}
