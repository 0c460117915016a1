#pragma once

#include <cstdint>

#include "gext/scalar.hpp"

namespace gext {

// splitmix64: tiny, deterministic, seedable. Property sweeps derive per-trial
// streams by reseeding with seed ^ trial index.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }

    // small scalar in {-4,...,4}; keeps rational growth tame in sweeps
    template <class K>
    K small_scalar() {
        return K(long(below(9)) - 4);
    }

private:
    uint64_t state_;
};

} // namespace gext
