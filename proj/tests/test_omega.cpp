#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gtj/omega.hpp"

using gtj::omega;
using gtj::omega_cross;

TEST_CASE("case table on the base period") {
    CHECK_EQ(omega(0), 0);
    CHECK_EQ(omega(1), 1);
    CHECK_EQ(omega(2), -1);
    CHECK_EQ(omega(4), 1);
    CHECK_EQ(omega(-2), 1);
}

TEST_CASE("periodicity and reflection on [-100, 100]") {
    for (std::int64_t n = -100; n <= 100; ++n) {
        CHECK_EQ(omega(n + 3), omega(n));
        CHECK_EQ(omega(-n), -omega(n));
        CHECK_EQ(omega(n) + omega(n + 1) + omega(n + 2), 0);
        CHECK((omega(n) == 0 || omega(n) == 1 || omega(n) == -1));
    }
}

TEST_CASE("cross identity equals omega(n - m)") {
    CHECK_EQ(omega_cross(0, 1), 1);
    CHECK_EQ(omega_cross(1, 2), 1);
    for (std::int64_t n = -30; n <= 30; ++n) {
        CHECK_EQ(omega_cross(n, n), 0);
    }
    for (std::int64_t m = -30; m <= 30; ++m) {
        for (std::int64_t n = -30; n <= 30; ++n) {
            CHECK_EQ(omega_cross(m, n), omega(n - m));
        }
    }
}
