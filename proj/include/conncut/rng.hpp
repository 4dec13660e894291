#pragma once

#include <cstdint>

namespace conncut {

/// splitmix64 stream. Used everywhere randomness is needed so results do
/// not depend on standard-library distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }

    /// True with probability num/den (num >= den means always).
    bool chance(uint64_t num, uint64_t den) {
        if (num >= den) return true;
        if (num == 0) return false;
        // next()/2^64 < num/den, via 128-bit threshold
        unsigned __int128 thr = (static_cast<unsigned __int128>(num) << 64) / den;
        return static_cast<unsigned __int128>(next()) < thr;
    }

private:
    uint64_t state_;
};

/// Fixed splitting rule: derive an independent stream from a root seed and
/// up to two indices. Trials and rounds use this so execution order and
/// thread schedule cannot change any draw.
inline uint64_t derive_seed(uint64_t root, uint64_t a, uint64_t b = 0) {
    Rng mix(root ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    mix.next();
    return mix.next();
}

}  // namespace conncut
