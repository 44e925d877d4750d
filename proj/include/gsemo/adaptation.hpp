#pragma once

#include "gsemo/core.hpp"

namespace gsemo {

class Rng;

/// Bin(n, p) conditioned on a positive outcome, by redrawing zeros.
/// Requires n >= 1 and 0 < p <= 1; throws std::invalid_argument otherwise.
int sample_binomial_gt0(int n, double p, Rng& rng);

/// Normal(mean, variance) rounded to the nearest integer, redrawn while < 1,
/// then capped at `cap`. Zero variance gives max(round(mean), 1) capped.
int sample_normal_gt0(double mean, double variance, int cap, Rng& rng);

/// Copy of x with exactly `count` distinct uniformly chosen positions inverted.
Bitstring flip(Bitstring const& x, int count, Rng& rng);

/// Two-rate mutation strength r, kept in [1/2, n/4].
struct TwoRateState {
    double r { 1.0 };
};

/// Halves (bounded below by 1/2) or doubles (bounded above by n/4) r.
TwoRateState two_rate_apply(TwoRateState st, bool halve, int n);

/// The winning half's choice is kept with probability 3/4: halving happens
/// with probability 3/4 if the best offspring came from the low-rate half and
/// 1/4 otherwise.
TwoRateState two_rate_update(TwoRateState st, bool winner_in_low_half, int n, Rng& rng);

/// Log-normal mutation rate p, kept in [1/(4n), 1/2].
struct LogNormalState {
    double p { 0.01 };
};

double clamp_lognormal_rate(double p, int n);

/// (1 + (1-p)/p * exp(0.22 g))^-1 for a given standard-normal draw g.
double lognormal_perturb_with(double p, double g);

/// lognormal_perturb_with(p, g) with g drawn from rng. Requires 0 < p < 1.
double lognormal_perturb(double p, Rng& rng);

inline constexpr double kVarianceDecay = 0.98;

/// Variance-controlled mean strength r and stagnation counter c.
struct VarCtrlState {
    double r { 1.0 };
    int c { 0 };
    double decay { kVarianceDecay };
};

/// F^c * r * (1 - r/n).
double var_ctrl_variance(double r, int c, int n, double decay = kVarianceDecay);

/// c increments when the winning strength equals r and resets otherwise;
/// r then takes the winning strength.
VarCtrlState var_ctrl_update(VarCtrlState st, int winning_strength);

} // namespace gsemo
