#pragma once

#include <cstdint>

namespace paucity {

// SplitMix64 (Steele, Lea, Vigna). Chosen because the whole generator is
// these three lines, so any reimplementation from the published constants
// reproduces identical streams from a 64-bit seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [lo, hi] by reduction. The modulo bias is
    // irrelevant for test-case generation and keeps the mapping trivial
    // to reproduce in other languages.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace paucity
