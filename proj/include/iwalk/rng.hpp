#pragma once

#include <cstdint>

#include "iwalk/rational.hpp"

namespace iwalk {

// Counter-based generator with an explicit 64-bit seed. All sampling goes
// through this so results are identical across platforms and standard-library
// versions.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) by rejection.
    uint64_t below(uint64_t bound);

    // True with probability num/den exactly; requires 0 <= num <= den and den
    // representable in 64 bits.
    bool bernoulli(const Rat& probability);

private:
    uint64_t state_;
};

// Per-block seed derivation for reproducible block-parallel sampling.
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace iwalk
