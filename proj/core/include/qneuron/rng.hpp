#pragma once

#include <cstdint>
#include <random>

namespace qneuron {

// Draw helpers on top of mt19937_64.  The standard <random> distributions are
// not pinned across library implementations; these are, which keeps trained
// models and reports byte-stable for a given seed.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

/// Uniform index in [0, n).  Modulo bias is ~n/2^64, irrelevant here.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(gen() % static_cast<std::uint64_t>(n));
}

inline bool coin_flip(std::mt19937_64& gen) { return (gen() & 1u) != 0; }

/// Derive an independent stream seed (splitmix64 finalizer).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qneuron
