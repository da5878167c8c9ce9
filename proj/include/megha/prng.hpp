#pragma once

#include <cstdint>

namespace megha {

// SplitMix64 (Steele, Lea, Flood 2014). Tiny, fast, and fully reproducible
// across platforms, which is all the generators need.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Bernoulli with probability num/den.
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }
};

} // namespace megha
