#pragma once

#include "gsemo/adaptation.hpp"
#include "gsemo/archive.hpp"
#include "gsemo/indicators.hpp"
#include "gsemo/problems.hpp"
#include "gsemo/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace gsemo {

enum class AlgorithmKind { Static, TwoRate, LogNormal, VarCtrl, Agsemo };

/// "static" | "two-rate" | "log-normal" | "var-ctrl" | "agsemo".
AlgorithmKind parse_algorithm_kind(std::string_view token);
std::string_view to_token(AlgorithmKind kind);

/// How the best offspring is picked when several share the top score.
/// First takes the earliest created one; Random picks uniformly.
enum class TieBreak { First, Random };

/// "first" | "random".
TieBreak parse_tie_break(std::string_view token);
std::string_view to_token(TieBreak rule);

/// Algorithm plus its guidance metric. Static and AGSEMO carry MetricKind::None
/// and never consult tie_break.
struct AlgorithmSpec {
    AlgorithmKind kind { AlgorithmKind::Static };
    Metric metric {};
    TieBreak tie_break { TieBreak::First };
};

/// Throws std::invalid_argument if the metric does not fit the algorithm.
AlgorithmSpec make_algorithm(AlgorithmKind kind, Metric metric = {}, TieBreak tie_break = TieBreak::First);

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

struct GenerationReport {
    std::int64_t generation { 0 };
    std::int64_t evaluations { 0 };
    /// r (two-rate, var-ctrl), p (log-normal, static), mean member r (AGSEMO).
    double global_param { 0.0 };
    /// global_param expressed as a per-bit rate.
    double mutation_rate { 0.0 };
    std::size_t archive_size { 0 };
    double hv { 0.0 };
    double igd { 0.0 };
};

/// Called once per function evaluation with the objectives produced and the
/// 1-based evaluation index.
using EvaluationObserver = std::function<void(ObjectiveVector const&, std::int64_t)>;

/// Everything one optimization run mutates.
struct RunState {
    AlgorithmSpec algorithm;
    Problem problem;
    Archive archive;
    std::vector<ObjectiveVector> front;
    std::int64_t evaluations { 0 };
    std::int64_t generation { 0 };
    TwoRateState two_rate {};
    LogNormalState log_normal {};
    VarCtrlState var_ctrl {};
    std::optional<OneObjState> oneobj;
    EvaluationObserver on_evaluation;
};

/// Samples and evaluates one uniform genotype (one evaluation) and seeds the
/// archive with it. Adaptation starts at r = 1 (two-rate, var-ctrl, AGSEMO
/// members) and p = 1/n (log-normal).
RunState init_run(AlgorithmSpec algorithm, Problem problem, Rng& rng, EvaluationObserver observer = {});

/// One generation of lambda offspring for Static, TwoRate, LogNormal and
/// VarCtrl; forwards to step_generation_agsemo for AGSEMO. Offspring are
/// scored against the archive as it stood at generation start, the adaptation
/// state is updated from the best-scoring offspring, and then all offspring
/// are offered to the archive in creation order.
/// The returned report has hv and igd left at zero; see attach_indicators.
GenerationReport step_generation(RunState& state, int lambda, Rng& rng);

/// One AGSEMO generation. Edge members mutate with the variance-controlled
/// normal scheme (capped at n/2); other members with a log-normal perturbed
/// rate derived from their own strength. Children carry their sampled
/// strength and a stagnation count inherited from the parent.
GenerationReport step_generation_agsemo(RunState& state, int lambda, Rng& rng);

GenerationReport current_report(RunState const& state);

/// Fills hv (reference (-1,-1)) and igd against the true front.
void attach_indicators(GenerationReport& report, RunState const& state);

struct FirstHit {
    ObjectiveVector objectives;
    std::int64_t evaluation;
};

struct RunOptions {
    int lambda { 10 };
    std::int64_t budget { kDefaultBudget };
    int trajectory_stride { 50 };
    bool capture_first_hits { false };
};

struct RunRecord {
    std::size_t run_id { 0 };
    std::uint64_t seed { 0 };
    bool completed { false };
    /// Evaluation index of the offspring that completed the front; the
    /// evaluations spent when incomplete.
    std::int64_t evaluations_to_front { 0 };
    std::int64_t evaluations_used { 0 };
    std::vector<GenerationReport> trajectory;
    bool first_hits_captured { false };
    /// In discovery order.
    std::vector<FirstHit> first_hits;
};

/// Runs whole generations until the archive covers the Pareto front or the
/// budget is spent. Reports are sampled at generations 0, stride, 2*stride...
RunRecord run(AlgorithmSpec algorithm, Problem problem, RunOptions const& options, std::uint64_t seed);

} // namespace gsemo
