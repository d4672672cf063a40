#ifndef BCHCS_RNG_HPP
#define BCHCS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace bchcs {

/// splitmix64: tiny, seedable, and stable across platforms, so seeded runs
/// reproduce byte-identically everywhere.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) without modulo bias.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (explicit formula keeps the stream
    /// implementation-independent, unlike std::normal_distribution).
    double normal() {
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// k distinct indices in [0, n), in selection order.
    std::vector<uint32_t> distinct(uint32_t k, uint32_t n) {
        std::vector<uint32_t> out;
        out.reserve(k);
        while (out.size() < k) {
            const uint32_t c = static_cast<uint32_t>(below(n));
            bool fresh = true;
            for (uint32_t v : out) fresh &= (v != c);
            if (fresh) out.push_back(c);
        }
        return out;
    }
};

/// Knuth MMIX linear congruential step; drives the sampled-Gram pair stream.
struct LcgPairSampler {
    uint64_t state;
    explicit LcgPairSampler(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    /// A pair of distinct column indices below n.
    std::pair<uint32_t, uint32_t> pair(uint32_t n) {
        for (;;) {
            const uint32_t a = static_cast<uint32_t>((next() >> 33) % n);
            const uint32_t b = static_cast<uint32_t>((next() >> 33) % n);
            if (a != b) return {a, b};
        }
    }
};

}  // namespace bchcs

#endif
