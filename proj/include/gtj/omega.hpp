#pragma once

#include <cstdint>

namespace gtj {

/// The period-3 kernel 0, 1, -1 behind every closed form here, extended to
/// all integers through the mathematical (non-negative) residue. Satisfies
/// omega(-n) == -omega(n) and omega(n) + omega(n+1) + omega(n+2) == 0.
constexpr int omega(std::int64_t n) noexcept {
    constexpr int table[3] = {0, 1, -1};
    return table[((n % 3) + 3) % 3];
}

/// omega(m+1)omega(n) - omega(m)omega(n+1); equals omega(n-m).
constexpr int omega_cross(std::int64_t m, std::int64_t n) noexcept {
    return omega(m + 1) * omega(n) - omega(m) * omega(n + 1);
}

}  // namespace gtj
