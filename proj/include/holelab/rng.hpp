#pragma once

#include <array>
#include <cstdint>

namespace holelab::rng {

// Threefry-2x64, 20 rounds (Salmon, Moraes, Dror, Shaw, "Parallel random
// numbers: as easy as 1, 2, 3", SC'11).  Keyed counter-based generator:
// output depends only on (key, counter), so streams are reproducible and
// order-independent across any number of workers.

struct U128 {
    std::uint64_t lo, hi;
};

inline U128 threefry2x64(std::uint64_t key0, std::uint64_t key1, std::uint64_t ctr0,
                         std::uint64_t ctr1) {
    constexpr std::uint64_t kParity = 0x1BD11BDAA9FC1A22ULL;
    constexpr int kRot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
    const std::uint64_t ks[3] = {key0, key1, kParity ^ key0 ^ key1};
    std::uint64_t x0 = ctr0 + ks[0];
    std::uint64_t x1 = ctr1 + ks[1];
    auto rotl = [](std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); };
    for (int r = 0; r < 20; ++r) {
        x0 += x1;
        x1 = rotl(x1, kRot[r % 8]);
        x1 ^= x0;
        if (r % 4 == 3) {
            const std::uint64_t inj = static_cast<std::uint64_t>(r / 4) + 1;
            x0 += ks[inj % 3];
            x1 += ks[(inj + 1) % 3];
            x1 += inj;
        }
    }
    return {x0, x1};
}

/// Uniform in (0, 1]: 53 high bits, shifted off zero so log() is safe.
inline double uniform_pos(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53;
}

/// Uniform in [0, 1).
inline double uniform(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1p-53;
}

}  // namespace holelab::rng
