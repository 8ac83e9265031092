#pragma once

#include <cstdint>

namespace fersml {

// SplitMix64: tiny, fully portable 64-bit generator. Every random draw in the
// library flows through this type so that a seed fixes behavior on every
// platform (std:: distributions are implementation-defined and would not).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    constexpr double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound > 0. Rejection sampling keeps the
    // draw exactly uniform.
    constexpr std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return (r - threshold) % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace fersml
