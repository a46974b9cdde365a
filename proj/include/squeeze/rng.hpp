#ifndef SQUEEZE_RNG_HPP
#define SQUEEZE_RNG_HPP

#include <cstdint>

namespace squeeze {

// SplitMix64: the documented deterministic PRNG behind every randomized
// choice (generic matrices, linear forms, test generators).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive); bias is negligible for our ranges.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 rng(seed ^ (salt * 0xD1B54A32D192ED03ULL + 0x9E3779B97F4A7C15ULL));
    return rng.next();
}

}  // namespace squeeze

#endif
