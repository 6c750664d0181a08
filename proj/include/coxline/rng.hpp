#pragma once

#include <cmath>
#include <cstdint>

namespace coxline {

/// Stateless 64-bit finalizer (splitmix64 avalanche).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// splitmix64 stream. Fully specified here so simulation results do not
/// depend on the standard library implementation.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Marsaglia polar method; two independent standard normals per call.
struct GaussianPair {
    double first;
    double second;
};

inline GaussianPair gaussian_pair(SplitMix64& rng) {
    double u, v, s;
    do {
        u = 2.0 * rng.uniform01() - 1.0;
        v = 2.0 * rng.uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    return {u * f, v * f};
}

/// Independent per-trial stream derived from (seed, point, trial); makes
/// results independent of how trials are split across workers.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t point, std::uint64_t trial) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ point);
    h = mix64(h ^ trial);
    return SplitMix64{h};
}

}  // namespace coxline
