#pragma once

#include <cstdint>
#include <random>

namespace lvqdrift {

using Rng = std::mt19937_64;

// SplitMix64 step, used to derive independent per-run seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Splitting rule: run k of a scenario with master seed s is driven by
// an mt19937_64 seeded with the (k+1)-th SplitMix64 output of s.
inline Rng make_run_rng(std::uint64_t master_seed, std::uint64_t run_index) {
    std::uint64_t state = master_seed;
    std::uint64_t seed = 0;
    for (std::uint64_t k = 0; k <= run_index; ++k) {
        seed = splitmix64(state);
    }
    return Rng(seed);
}

}  // namespace lvqdrift
