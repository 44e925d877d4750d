#pragma once

#include "gsemo/archive.hpp"
#include "gsemo/core.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsemo {

class Rng;

struct ReferencePoint {
    double y1 { -1.0 };
    double y2 { -1.0 };
};

/// Area dominated by `front` (maximization) and bounded below by `ref`.
/// Dominated and duplicate points are allowed. Throws std::invalid_argument
/// if a point does not strictly exceed ref in both coordinates.
double hypervolume_2d(std::span<ObjectiveVector const> front, ReferencePoint ref = {});

/// Inverted generational distance: sqrt(sum_v d(v, obtained)^2) / |true_front|,
/// with d the Euclidean distance to the nearest obtained point. Throws
/// std::invalid_argument if either set is empty.
double igd(std::span<ObjectiveVector const> true_front, std::span<ObjectiveVector const> obtained);

enum class MetricKind { None, Hv, Igd, OneObj };

/// Guidance metric e(x). OneObj carries its resampling period T.
struct Metric {
    MetricKind kind { MetricKind::None };
    int period { 1 };

    friend bool operator==(Metric const&, Metric const&) = default;
};

/// "hv" | "igd" | "oneobj" | "oneobj10" | "oneobj50" (also "none" and "oneobj<T>").
Metric parse_metric(std::string_view token);
std::string to_token(Metric const& m);

enum class Objective { First, Second };

struct OneObjState {
    Objective active { Objective::First };
    int generations_since_resample { 0 };
    int period { 1 };
};

/// Initial state: the active objective is drawn immediately.
OneObjState make_oneobj_state(int period, Rng& rng);

/// Advances one generation; every `period` generations redraws the active
/// objective (first iff rand < 0.5) and resets the counter.
OneObjState tick_oneobj(OneObjState state, Rng& rng);

/// Scores candidates against an archive snapshot taken at generation start.
///
/// HV: hypervolume of P u {cand}. IGD: -igd(front, P u {cand}).
/// OneObj: cand.y_active - y_active*. Larger is better for every metric.
class GenerationScorer {
public:
    GenerationScorer(Metric metric, OneObjState const* state, Archive const& archive,
        std::span<ObjectiveVector const> true_front);

    double operator()(ObjectiveVector const& cand);

    double base_hypervolume() const noexcept { return base_hv_; }

private:
    Metric metric_;
    Objective active_ { Objective::First };
    BestValues best_ {};
    std::vector<ObjectiveVector> members_; // y1 ascending
    std::span<ObjectiveVector const> front_;
    std::vector<double> nearest_sq_; // per front point, squared distance to P
    std::vector<ObjectiveVector> scratch_;
    double base_hv_ { 0.0 };
};

/// One-shot form of GenerationScorer. OneObj requires `state`.
double score(Metric metric, OneObjState const* state, Archive const& archive, ObjectiveVector const& cand);

} // namespace gsemo
