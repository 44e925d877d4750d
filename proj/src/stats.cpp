#include "gsemo/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsemo {

SampleSummary summarize(std::span<double const> samples)
{
    if (samples.empty()) {
        throw std::invalid_argument("summarize: empty sample");
    }
    SampleSummary s;
    s.count = samples.size();
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (double x : samples) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.variance = ss / static_cast<double>(s.count - 1);
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const auto mid = s.count / 2;
    s.median = s.count % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return s;
}

namespace {
    struct Ranking {
        std::vector<double> ranks; // pooled order: a then b
        double tie_term { 0.0 };   // sum of t^3 - t over tie groups
    };

    Ranking midranks(std::span<double const> a, std::span<double const> b)
    {
        const auto total = a.size() + b.size();
        std::vector<double> pooled;
        pooled.reserve(total);
        pooled.insert(pooled.end(), a.begin(), a.end());
        pooled.insert(pooled.end(), b.begin(), b.end());

        std::vector<std::size_t> order(total);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto i, auto j) { return pooled[i] < pooled[j]; });

        Ranking r;
        r.ranks.resize(total);
        for (std::size_t i = 0; i < total;) {
            std::size_t j = i;
            while (j + 1 < total && pooled[order[j + 1]] == pooled[order[i]]) {
                ++j;
            }
            const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
            for (auto k = i; k <= j; ++k) {
                r.ranks[order[k]] = rank;
            }
            const auto t = static_cast<double>(j - i + 1);
            r.tie_term += t * t * t - t;
            i = j + 1;
        }
        return r;
    }
} // namespace

MannWhitneyResult mann_whitney_u(std::span<double const> a, std::span<double const> b)
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("mann_whitney_u: empty sample");
    }
    const auto m = a.size();
    const auto n = b.size();
    const auto total = m + n;
    const auto ranking = midranks(a, b);

    const double offset = static_cast<double>(m * (m + 1)) / 2.0;
    const double rank_sum = std::accumulate(ranking.ranks.begin(), ranking.ranks.begin() + static_cast<long>(m), 0.0);
    const double mean_u = static_cast<double>(m * n) / 2.0;

    MannWhitneyResult result;
    result.u = rank_sum - offset;
    const double deviation = std::abs(result.u - mean_u);

    const double nn = static_cast<double>(total);
    const double variance = static_cast<double>(m * n) / 12.0 * ((nn + 1.0) - ranking.tie_term / (nn * (nn - 1.0)));
    if (variance > 0.0) {
        result.z = std::max(0.0, deviation - 0.5) / std::sqrt(variance);
        if (result.u < mean_u) {
            result.z = -result.z;
        }
    }

    if (total <= kExactMannWhitneyLimit) {
        // Enumerate every assignment of m pooled ranks to the first sample.
        constexpr double eps = 1e-9;
        std::size_t extreme = 0;
        std::size_t labelings = 0;
        for (std::uint32_t mask = 0; mask < (std::uint32_t { 1 } << total); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != m) {
                continue;
            }
            double s = 0.0;
            for (std::size_t k = 0; k < total; ++k) {
                if (mask & (std::uint32_t { 1 } << k)) {
                    s += ranking.ranks[k];
                }
            }
            ++labelings;
            if (std::abs(s - offset - mean_u) >= deviation - eps) {
                ++extreme;
            }
        }
        result.p = static_cast<double>(extreme) / static_cast<double>(labelings);
        result.exact = true;
    } else if (variance > 0.0) {
        result.p = std::min(1.0, std::erfc(std::abs(result.z) / std::sqrt(2.0)));
    } else {
        result.p = 1.0;
    }
    return result;
}

} // namespace gsemo
