#pragma once

#include <cstdint>

namespace lune {

/// splitmix64 (Steele, Lea, Flood; public domain reference constants).
/// Chosen over <random> engines because the full algorithm fits in four
/// lines and reproduces bit-for-bit in any language, which the generated
/// test corpora rely on. Doubles are the top 53 bits scaled into [0, 1).
struct SplitMix64 {
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t state;
};

/// PRNG identifier recorded in generated-document metadata.
inline constexpr const char* kPrngId = "splitmix64/v1";

}  // namespace lune
