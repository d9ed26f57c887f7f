#pragma once

#include <random>

#include "gtj/sequence.hpp"

namespace testutil {

inline gtj::Rational frac(long long num, long long den = 1) {
    return gtj::make_rational(num, den);
}

inline gtj::Rational random_rational(std::mt19937_64& rng, int bound = 9, int den_bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return gtj::make_rational(num(rng), den(rng));
}

inline gtj::GaussianRational random_gaussian(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline gtj::SeedTriple random_seed(std::mt19937_64& rng) {
    for (;;) {
        const auto a = random_rational(rng);
        const auto b = random_rational(rng);
        const auto c = random_rational(rng);
        if (!(a == 0 && b == 0 && c == 0)) {
            return {a, b, c};
        }
    }
}

inline gtj::SeedTriple random_integer_seed(std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        const int a = dist(rng);
        const int b = dist(rng);
        const int c = dist(rng);
        if (a != 0 || b != 0 || c != 0) {
            return {gtj::Rational(a), gtj::Rational(b), gtj::Rational(c)};
        }
    }
}

}  // namespace testutil
