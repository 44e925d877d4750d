#include "gsemo/indicators.hpp"

#include "gsemo/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsemo {

namespace {
    // Points must already be sorted by y1 descending.
    template <typename Range>
    double sweep_descending(Range const& points, ReferencePoint ref)
    {
        double area = 0.0;
        double top = ref.y2;
        const ObjectiveVector* prev = nullptr;
        for (auto const& p : points) {
            if (prev != nullptr) {
                area += (static_cast<double>(prev->y1) - static_cast<double>(p.y1)) * (top - ref.y2);
            }
            top = std::max(top, static_cast<double>(p.y2));
            prev = &p;
        }
        if (prev != nullptr) {
            area += (static_cast<double>(prev->y1) - ref.y1) * (top - ref.y2);
        }
        return area;
    }

    double squared_distance(ObjectiveVector const& a, ObjectiveVector const& b)
    {
        const auto d1 = static_cast<double>(a.y1 - b.y1);
        const auto d2 = static_cast<double>(a.y2 - b.y2);
        return d1 * d1 + d2 * d2;
    }
} // namespace

double hypervolume_2d(std::span<ObjectiveVector const> front, ReferencePoint ref)
{
    std::vector<ObjectiveVector> pts(front.begin(), front.end());
    for (auto const& p : pts) {
        if (!(static_cast<double>(p.y1) > ref.y1 && static_cast<double>(p.y2) > ref.y2)) {
            throw std::invalid_argument("hypervolume_2d: point does not dominate the reference point");
        }
    }
    std::sort(pts.begin(), pts.end(), [](auto const& a, auto const& b) { return a.y1 > b.y1; });
    return sweep_descending(pts, ref);
}

double igd(std::span<ObjectiveVector const> true_front, std::span<ObjectiveVector const> obtained)
{
    if (true_front.empty() || obtained.empty()) {
        throw std::invalid_argument("igd: empty set");
    }
    double sum = 0.0;
    for (auto const& v : true_front) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& q : obtained) {
            best = std::min(best, squared_distance(v, q));
        }
        sum += best;
    }
    return std::sqrt(sum) / static_cast<double>(true_front.size());
}

Metric parse_metric(std::string_view token)
{
    if (token == "none") {
        return { MetricKind::None, 1 };
    }
    if (token == "hv") {
        return { MetricKind::Hv, 1 };
    }
    if (token == "igd") {
        return { MetricKind::Igd, 1 };
    }
    if (token.starts_with("oneobj")) {
        auto digits = token.substr(6);
        if (digits.empty()) {
            return { MetricKind::OneObj, 1 };
        }
        int period = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), period);
        if (ec == std::errc {} && ptr == digits.data() + digits.size() && period >= 1) {
            return { MetricKind::OneObj, period };
        }
    }
    throw std::invalid_argument("unknown metric: " + std::string(token));
}

std::string to_token(Metric const& m)
{
    switch (m.kind) {
    case MetricKind::None:
        return "none";
    case MetricKind::Hv:
        return "hv";
    case MetricKind::Igd:
        return "igd";
    case MetricKind::OneObj:
        return m.period == 1 ? "oneobj" : "oneobj" + std::to_string(m.period);
    }
    return "unknown";
}

OneObjState make_oneobj_state(int period, Rng& rng)
{
    if (period < 1) {
        throw std::invalid_argument("OneObj period must be positive");
    }
    OneObjState s;
    s.period = period;
    s.active = rng.uniform01() < 0.5 ? Objective::First : Objective::Second;
    return s;
}

OneObjState tick_oneobj(OneObjState state, Rng& rng)
{
    ++state.generations_since_resample;
    if (state.generations_since_resample >= state.period) {
        state.active = rng.uniform01() < 0.5 ? Objective::First : Objective::Second;
        state.generations_since_resample = 0;
    }
    return state;
}

GenerationScorer::GenerationScorer(Metric metric, OneObjState const* state, Archive const& archive,
    std::span<ObjectiveVector const> true_front)
    : metric_(metric)
    , front_(true_front)
{
    if (archive.empty()) {
        throw std::invalid_argument("GenerationScorer: empty archive");
    }
    switch (metric.kind) {
    case MetricKind::None:
        break;
    case MetricKind::Hv:
        members_ = archive.objective_vectors();
        base_hv_ = sweep_descending(std::vector<ObjectiveVector>(members_.rbegin(), members_.rend()), ReferencePoint {});
        scratch_.reserve(members_.size() + 1);
        break;
    case MetricKind::Igd:
        nearest_sq_.reserve(front_.size());
        for (auto const& v : front_) {
            double best = std::numeric_limits<double>::infinity();
            for (auto const& m : archive.members()) {
                best = std::min(best, squared_distance(v, m.objectives));
            }
            nearest_sq_.push_back(best);
        }
        break;
    case MetricKind::OneObj:
        if (state == nullptr) {
            throw std::invalid_argument("GenerationScorer: OneObj metric needs a OneObjState");
        }
        active_ = state->active;
        best_ = archive.best_values();
        break;
    }
}

double GenerationScorer::operator()(ObjectiveVector const& cand)
{
    switch (metric_.kind) {
    case MetricKind::None:
        return 0.0;
    case MetricKind::Hv: {
        // members_ in descending y1 with cand merged in place
        scratch_.clear();
        bool placed = false;
        for (auto it = members_.rbegin(); it != members_.rend(); ++it) {
            if (!placed && cand.y1 >= it->y1) {
                scratch_.push_back(cand);
                placed = true;
            }
            scratch_.push_back(*it);
        }
        if (!placed) {
            scratch_.push_back(cand);
        }
        return sweep_descending(scratch_, ReferencePoint {});
    }
    case MetricKind::Igd: {
        double sum = 0.0;
        for (std::size_t k = 0; k < front_.size(); ++k) {
            sum += std::min(nearest_sq_[k], squared_distance(front_[k], cand));
        }
        return -std::sqrt(sum) / static_cast<double>(front_.size());
    }
    case MetricKind::OneObj:
        return active_ == Objective::First ? static_cast<double>(cand.y1 - best_.y1)
                                           : static_cast<double>(cand.y2 - best_.y2);
    }
    return 0.0;
}

double score(Metric metric, OneObjState const* state, Archive const& archive, ObjectiveVector const& cand)
{
    const auto front = pareto_front(archive.problem());
    GenerationScorer scorer(metric, state, archive, front);
    return scorer(cand);
}

} // namespace gsemo
