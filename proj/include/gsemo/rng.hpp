#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace gsemo {

/// Random stream used by every run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All variates (uniform reals, bounded integers, normals) are
/// derived here rather than through <random> distributions, whose algorithms
/// are implementation-defined, so trajectories are reproducible across
/// standard libraries and languages.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform_open0() { return 1.0 - uniform01(); }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::size_t uniform_index(std::size_t bound);

    /// Standard normal via Box-Muller; the second variate is discarded.
    double standard_normal();

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer: a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Per-run seed: splitmix64(base + index * 0x9E3779B97F4A7C15).
/// Distinct for distinct indices under a fixed base since the multiplier is
/// odd and the finalizer is bijective.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index)
{
    return splitmix64(base_seed + index * 0x9E3779B97F4A7C15ULL);
}

} // namespace gsemo
