#pragma once

#include <cstdint>

#include "tileflip/geometry.hpp"

namespace tileflip {

// Counter-based randomness stream addressed by (seed, step, lane). Every
// chain step consumes one fixed draw layout regardless of whether the move
// is applicable, so coupled copies and parallel trials stay aligned and any
// trajectory can be replayed from (seed, step) alone.
struct StepDraws {
    uint64_t site_raw;   // uniform 64-bit word for the site index
    bool dir_up;         // direction bit
    double unit;         // uniform real in [0,1)
};

inline uint64_t stream_word(uint64_t seed, uint64_t step, uint64_t lane) {
    uint64_t h = mix64(seed ^ mix64(step + 0x632be59bd9b4e019ull));
    return mix64(h ^ mix64(lane * 0xd6e8feb86659fd93ull + 0x100000001b3ull));
}

// Unbiased enough for desk scale: Lemire multiply-shift, fully deterministic.
inline uint32_t bounded_index(uint64_t word, uint32_t n) {
    return static_cast<uint32_t>((static_cast<unsigned __int128>(word) * n) >> 64);
}

inline double unit_real(uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

inline StepDraws draws_for(uint64_t seed, uint64_t step) {
    StepDraws d;
    d.site_raw = stream_word(seed, step, 1);
    d.dir_up = (stream_word(seed, step, 2) & 1ull) != 0;
    d.unit = unit_real(stream_word(seed, step, 3));
    return d;
}

// Derives independent per-trial seeds from a base seed.
inline uint64_t trial_seed(uint64_t seed_base, uint64_t trial) {
    return mix64(seed_base ^ mix64(trial + 0x5851f42d4c957f2dull));
}

}  // namespace tileflip
