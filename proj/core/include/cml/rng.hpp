#pragma once

#include <cstdint>

namespace cml {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, counter), so lattice initialisation and PCA noise are reproducible
// and order-independent.
inline uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + splitmix64(b)));
}

// Uniform in [0,1), 53 random bits.
inline double u01(uint64_t seed, uint64_t counter) {
    return static_cast<double>(hash_combine(seed, counter) >> 11) * 0x1.0p-53;
}

// Derives an independent stream key, e.g. per (eps index, replica).
inline uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    return hash_combine(hash_combine(hash_combine(seed, a), b), c);
}

}  // namespace cml
