#include "gsemo/adaptation.hpp"

#include "gsemo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsemo {

namespace {
    // Bin(n, p) by jumping between successes with geometric gaps.
    int sample_binomial(int n, double p, Rng& rng)
    {
        if (p >= 1.0) {
            return n;
        }
        const double log_q = std::log1p(-p);
        int successes = 0;
        double position = -1.0;
        for (;;) {
            position += 1.0 + std::floor(std::log(rng.uniform_open0()) / log_q);
            if (position >= n) {
                return successes;
            }
            ++successes;
        }
    }
} // namespace

int sample_binomial_gt0(int n, double p, Rng& rng)
{
    if (n < 1) {
        throw std::invalid_argument("sample_binomial_gt0: n must be positive");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sample_binomial_gt0: p must lie in (0, 1]");
    }
    int ell = 0;
    while (ell == 0) {
        ell = sample_binomial(n, p, rng);
    }
    return ell;
}

int sample_normal_gt0(double mean, double variance, int cap, Rng& rng)
{
    if (cap < 1) {
        throw std::invalid_argument("sample_normal_gt0: cap must be at least 1");
    }
    if (variance < 0.0) {
        throw std::invalid_argument("sample_normal_gt0: negative variance");
    }
    long ell = 0;
    if (variance == 0.0) {
        ell = std::max(std::lround(mean), 1L);
    } else {
        const double sd = std::sqrt(variance);
        do {
            ell = std::lround(mean + sd * rng.standard_normal());
        } while (ell < 1);
    }
    return static_cast<int>(std::min<long>(ell, cap));
}

Bitstring flip(Bitstring const& x, int count, Rng& rng)
{
    const auto n = x.size();
    if (count < 1 || static_cast<std::size_t>(count) > n) {
        throw std::invalid_argument("flip: count out of range");
    }
    // Floyd's sampling of `count` distinct positions.
    Bitstring mask(n);
    for (auto j = n - static_cast<std::size_t>(count); j < n; ++j) {
        const auto t = rng.uniform_index(j + 1);
        mask.toggle(mask[t] ? j : t);
    }
    Bitstring y = x;
    y ^= mask;
    return y;
}

TwoRateState two_rate_apply(TwoRateState st, bool halve, int n)
{
    st.r = halve ? std::max(st.r / 2.0, 0.5) : std::min(2.0 * st.r, n / 4.0);
    return st;
}

TwoRateState two_rate_update(TwoRateState st, bool winner_in_low_half, int n, Rng& rng)
{
    const double s = winner_in_low_half ? 0.75 : 0.25;
    const double q = rng.uniform01();
    return two_rate_apply(st, q <= s, n);
}

double clamp_lognormal_rate(double p, int n) { return std::clamp(p, 1.0 / (4.0 * n), 0.5); }

double lognormal_perturb_with(double p, double g)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("lognormal_perturb: p must lie in (0, 1)");
    }
    return 1.0 / (1.0 + (1.0 - p) / p * std::exp(0.22 * g));
}

double lognormal_perturb(double p, Rng& rng) { return lognormal_perturb_with(p, rng.standard_normal()); }

double var_ctrl_variance(double r, int c, int n, double decay)
{
    return std::max(0.0, std::pow(decay, c) * r * (1.0 - r / n));
}

VarCtrlState var_ctrl_update(VarCtrlState st, int winning_strength)
{
    if (winning_strength < 1) {
        throw std::invalid_argument("var_ctrl_update: strength must be at least 1");
    }
    st.c = static_cast<double>(winning_strength) == st.r ? st.c + 1 : 0;
    st.r = winning_strength;
    return st;
}

} // namespace gsemo
