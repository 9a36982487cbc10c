#ifndef SYLV_RNG_HPP
#define SYLV_RNG_HPP

#include <cstdint>

namespace sylv {

// SplitMix64 (Steele, Lea & Flood).  The algorithm is pinned here, in full,
// so that a seeded verification campaign replays bit-identically on any
// platform or implementation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [-bound, bound] by modular reduction of next().
    // (The modulo bias is astronomically small and irrelevant here; what
    // matters is that the mapping is fixed.)
    long bounded(long bound) {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(next() % span) - bound;
    }

private:
    std::uint64_t state_;
};

} // namespace sylv

#endif
