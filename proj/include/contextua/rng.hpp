// splitmix64: seedable 64-bit generator with a platform-independent stream.
// Same seed gives the same sequence everywhere, which the sweep and sampling
// commands rely on for byte-identical reruns.

#pragma once

#include <cstdint>

namespace contextua {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): top 53 bits scaled.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, 2*pi).
    double next_angle() { return next_double() * 6.283185307179586476925286766559; }

    /// Independent substream for draw `index`, derived only from (seed, index).
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        return SplitMix64(mixer.next_u64());
    }
};

}  // namespace contextua
