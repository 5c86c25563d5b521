#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "rlra/core/matrix.hpp"

namespace rlra {

// Seeded pseudo-random source of N(0,1) deviates.
//
// xoshiro256++ state seeded through splitmix64, with Box-Muller on top.
// Everything is implemented here rather than with <random> because
// std::normal_distribution's output is not pinned by the standard; this
// generator emits a bit-identical stream for a given seed on any platform
// with IEEE doubles and the same libm.
class RngState {
public:
    explicit RngState(std::uint64_t seed = 0) {
        // splitmix64 expansion of the seed into the four state words.
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix64(x);
    }

    // Raw 64-bit output (xoshiro256++).
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal deviate via Box-Muller; generates pairs, caches the spare.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite; u2 in [0,1).
        const double u1 = 1.0 - next_unit();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Child generator for an independent block of work. Advances this state by
    // one raw draw and hashes it, so successive calls yield distinct substreams
    // and the derivation depends only on how many substreams were taken before.
    RngState substream() {
        std::uint64_t key = next_u64();
        return RngState(splitmix64(key));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// m-by-n matrix of independent N(0,1) entries, filled column by column.
inline DenseMatrix gaussian_matrix(int rows, int cols, RngState& rng) {
    DenseMatrix g(rows, cols);
    double* p = g.data();
    for (std::size_t i = 0; i < g.size(); ++i) p[i] = rng.next_gaussian();
    return g;
}

}  // namespace rlra
