#pragma once

#include <cstddef>
#include <span>

namespace gsemo {

/// Mean, unbiased (n-1 divisor) variance, count and median of a sample.
/// A single observation has variance 0.
struct SampleSummary {
    double mean { 0.0 };
    double variance { 0.0 };
    std::size_t count { 0 };
    double median { 0.0 };
};

inline constexpr const char* kVarianceDivisor = "n-1";

/// Throws std::invalid_argument on an empty sample.
SampleSummary summarize(std::span<double const> samples);

struct MannWhitneyResult {
    /// U statistic of the first sample: rank sum minus m(m+1)/2, midranks for ties.
    double u { 0.0 };
    /// Normal score with continuity correction (0 when the variance vanishes).
    double z { 0.0 };
    /// Two-sided p-value.
    double p { 1.0 };
    bool exact { false };
};

/// Largest pooled size for which the exact permutation distribution is used.
inline constexpr std::size_t kExactMannWhitneyLimit = 16;

/// Two-sided Mann-Whitney U test. Exact permutation p-value when
/// |a| + |b| <= 16, otherwise the tie-corrected normal approximation with
/// continuity correction. Throws std::invalid_argument on empty input.
MannWhitneyResult mann_whitney_u(std::span<double const> a, std::span<double const> b);

} // namespace gsemo
