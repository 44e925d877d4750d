#include "gsemo/algorithms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gsemo {

AlgorithmKind parse_algorithm_kind(std::string_view token)
{
    if (token == "static") {
        return AlgorithmKind::Static;
    }
    if (token == "two-rate") {
        return AlgorithmKind::TwoRate;
    }
    if (token == "log-normal") {
        return AlgorithmKind::LogNormal;
    }
    if (token == "var-ctrl") {
        return AlgorithmKind::VarCtrl;
    }
    if (token == "agsemo") {
        return AlgorithmKind::Agsemo;
    }
    throw std::invalid_argument("unknown algorithm: " + std::string(token));
}

std::string_view to_token(AlgorithmKind kind)
{
    switch (kind) {
    case AlgorithmKind::Static:
        return "static";
    case AlgorithmKind::TwoRate:
        return "two-rate";
    case AlgorithmKind::LogNormal:
        return "log-normal";
    case AlgorithmKind::VarCtrl:
        return "var-ctrl";
    case AlgorithmKind::Agsemo:
        return "agsemo";
    }
    return "unknown";
}

TieBreak parse_tie_break(std::string_view token)
{
    if (token == "first") {
        return TieBreak::First;
    }
    if (token == "random") {
        return TieBreak::Random;
    }
    throw std::invalid_argument("unknown tie-break rule: " + std::string(token));
}

std::string_view to_token(TieBreak rule)
{
    return rule == TieBreak::First ? "first" : "random";
}

AlgorithmSpec make_algorithm(AlgorithmKind kind, Metric metric, TieBreak tie_break)
{
    const bool adaptive = kind == AlgorithmKind::TwoRate || kind == AlgorithmKind::LogNormal
        || kind == AlgorithmKind::VarCtrl;
    if (adaptive && metric.kind == MetricKind::None) {
        throw std::invalid_argument(std::string(to_token(kind)) + " needs a guidance metric");
    }
    if (!adaptive) {
        metric = {};
    }
    return { kind, metric, tie_break };
}

namespace {
    void evaluate_into(RunState& state, Individual& child)
    {
        child.objectives = evaluate(state.problem, child.genotype);
        ++state.evaluations;
        if (state.on_evaluation) {
            state.on_evaluation(child.objectives, state.evaluations);
        }
    }

    // Index of the largest score. Random tie-breaking draws from rng only
    // when a tie actually occurs.
    std::size_t argmax(std::vector<double> const& scores, TieBreak tie_break, Rng& rng)
    {
        std::size_t best = 0;
        std::size_t ties = 1;
        for (std::size_t i = 1; i < scores.size(); ++i) {
            if (scores[i] > scores[best]) {
                best = i;
                ties = 1;
            } else if (scores[i] == scores[best] && tie_break == TieBreak::Random) {
                ++ties;
                if (rng.uniform_index(ties) == 0) {
                    best = i;
                }
            }
        }
        return best;
    }

    void insert_all(RunState& state, std::vector<Individual>& offspring)
    {
        for (auto& child : offspring) {
            state.archive.try_insert(std::move(child));
        }
    }
} // namespace

RunState init_run(AlgorithmSpec algorithm, Problem problem, Rng& rng, EvaluationObserver observer)
{
    RunState state {
        .algorithm = algorithm,
        .problem = problem,
        .archive = Archive(problem),
        .front = pareto_front(problem),
        .oneobj = std::nullopt,
        .on_evaluation = std::move(observer),
    };
    state.log_normal.p = 1.0 / static_cast<double>(problem.n);
    if (algorithm.metric.kind == MetricKind::OneObj) {
        state.oneobj = make_oneobj_state(algorithm.metric.period, rng);
    }
    Individual first { Bitstring::random(problem.n, rng), {}, 1.0, 0 };
    evaluate_into(state, first);
    state.archive.try_insert(std::move(first));
    return state;
}

GenerationReport step_generation(RunState& state, int lambda, Rng& rng)
{
    if (state.algorithm.kind == AlgorithmKind::Agsemo) {
        return step_generation_agsemo(state, lambda, rng);
    }
    if (lambda < 1) {
        throw std::invalid_argument("lambda must be at least 1");
    }
    const int n = static_cast<int>(state.problem.n);
    const auto kind = state.algorithm.kind;
    auto const& members = state.archive.members();

    std::optional<GenerationScorer> scorer;
    if (kind != AlgorithmKind::Static) {
        scorer.emplace(state.algorithm.metric, state.oneobj ? &*state.oneobj : nullptr, state.archive, state.front);
    }

    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(lambda));
    std::vector<double> scores;
    std::vector<double> rates; // per-offspring p (log-normal)
    std::vector<int> strengths;
    scores.reserve(static_cast<std::size_t>(lambda));
    rates.reserve(static_cast<std::size_t>(lambda));
    strengths.reserve(static_cast<std::size_t>(lambda));

    const int low_half = lambda / 2;
    for (int i = 0; i < lambda; ++i) {
        auto const& parent = members[rng.uniform_index(members.size())];
        int ell = 1;
        switch (kind) {
        case AlgorithmKind::Static:
            ell = sample_binomial_gt0(n, 1.0 / n, rng);
            break;
        case AlgorithmKind::TwoRate: {
            const double p = i < low_half ? state.two_rate.r / (2.0 * n) : 2.0 * state.two_rate.r / n;
            ell = sample_binomial_gt0(n, std::min(p, 1.0), rng);
            break;
        }
        case AlgorithmKind::LogNormal: {
            const double p = lognormal_perturb(state.log_normal.p, rng);
            rates.push_back(p);
            ell = sample_binomial_gt0(n, p, rng);
            break;
        }
        case AlgorithmKind::VarCtrl: {
            auto const& vc = state.var_ctrl;
            ell = sample_normal_gt0(vc.r, var_ctrl_variance(vc.r, vc.c, n, vc.decay), n, rng);
            break;
        }
        case AlgorithmKind::Agsemo:
            break;
        }
        strengths.push_back(ell);
        Individual child { flip(parent.genotype, ell, rng), {}, 1.0, 0 };
        evaluate_into(state, child);
        if (scorer) {
            scores.push_back((*scorer)(child.objectives));
        }
        offspring.push_back(std::move(child));
    }

    if (kind != AlgorithmKind::Static) {
        const auto winner = argmax(scores, state.algorithm.tie_break, rng);
        switch (kind) {
        case AlgorithmKind::TwoRate:
            state.two_rate = two_rate_update(state.two_rate, static_cast<int>(winner) < low_half, n, rng);
            break;
        case AlgorithmKind::LogNormal:
            state.log_normal.p = clamp_lognormal_rate(rates[winner], n);
            break;
        case AlgorithmKind::VarCtrl:
            state.var_ctrl = var_ctrl_update(state.var_ctrl, strengths[winner]);
            break;
        default:
            break;
        }
    }

    insert_all(state, offspring);
    if (state.oneobj) {
        state.oneobj = tick_oneobj(*state.oneobj, rng);
    }
    ++state.generation;
    return current_report(state);
}

GenerationReport step_generation_agsemo(RunState& state, int lambda, Rng& rng)
{
    if (lambda < 1) {
        throw std::invalid_argument("lambda must be at least 1");
    }
    const int n = static_cast<int>(state.problem.n);
    const int half = n / 2;
    auto const& members = state.archive.members();

    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(lambda));
    for (int i = 0; i < lambda; ++i) {
        const auto index = rng.uniform_index(members.size());
        auto const& parent = members[index];
        int ell = 1;
        if (state.archive.is_edge_at(index)) {
            const double variance = var_ctrl_variance(parent.strength, parent.stagnation, n);
            ell = sample_normal_gt0(parent.strength, variance, half, rng);
        } else {
            const double p = lognormal_perturb(parent.strength / n, rng);
            ell = sample_binomial_gt0(n, p, rng);
        }
        const int stagnation = static_cast<double>(ell) == parent.strength ? parent.stagnation + 1 : 0;
        Individual child { flip(parent.genotype, ell, rng), {}, std::min<double>(ell, half), stagnation };
        evaluate_into(state, child);
        offspring.push_back(std::move(child));
    }
    insert_all(state, offspring);
    ++state.generation;
    return current_report(state);
}

GenerationReport current_report(RunState const& state)
{
    const double n = static_cast<double>(state.problem.n);
    GenerationReport report;
    report.generation = state.generation;
    report.evaluations = state.evaluations;
    report.archive_size = state.archive.size();
    switch (state.algorithm.kind) {
    case AlgorithmKind::Static:
        report.global_param = 1.0 / n;
        report.mutation_rate = 1.0 / n;
        break;
    case AlgorithmKind::TwoRate:
        report.global_param = state.two_rate.r;
        report.mutation_rate = state.two_rate.r / n;
        break;
    case AlgorithmKind::LogNormal:
        report.global_param = state.log_normal.p;
        report.mutation_rate = state.log_normal.p;
        break;
    case AlgorithmKind::VarCtrl:
        report.global_param = state.var_ctrl.r;
        report.mutation_rate = state.var_ctrl.r / n;
        break;
    case AlgorithmKind::Agsemo: {
        double total = 0.0;
        for (auto const& m : state.archive.members()) {
            total += m.strength;
        }
        report.global_param = total / static_cast<double>(state.archive.size());
        report.mutation_rate = report.global_param / n;
        break;
    }
    }
    return report;
}

void attach_indicators(GenerationReport& report, RunState const& state)
{
    const auto vectors = state.archive.objective_vectors();
    report.hv = hypervolume_2d(vectors);
    report.igd = igd(state.front, vectors);
}

RunRecord run(AlgorithmSpec algorithm, Problem problem, RunOptions const& options, std::uint64_t seed)
{
    if (options.budget < 1 || options.lambda < 1 || options.trajectory_stride < 1) {
        throw std::invalid_argument("run: budget, lambda and stride must be positive");
    }
    RunRecord record;
    record.seed = seed;
    record.first_hits_captured = options.capture_first_hits;

    const auto n = static_cast<std::int64_t>(problem.n);
    const auto front_size = pareto_front_size(problem);
    const std::int64_t front_offset = problem.kind == ProblemKind::Cocz ? n / 2 : 0;
    std::vector<bool> front_seen(front_size, false);
    std::size_t front_found = 0;
    std::int64_t completion = 0;

    // dense first-hit table over [0, n]^2
    const auto side = static_cast<std::size_t>(n + 1);
    std::vector<std::int64_t> first_hit;
    if (options.capture_first_hits) {
        first_hit.assign(side * side, 0);
    }

    auto observer = [&](ObjectiveVector const& y, std::int64_t evaluation) {
        if (is_pareto_optimal(problem, y)) {
            const auto slot = static_cast<std::size_t>(y.y1 - front_offset);
            if (!front_seen[slot]) {
                front_seen[slot] = true;
                if (++front_found == front_size) {
                    completion = evaluation;
                }
            }
        }
        if (options.capture_first_hits) {
            auto& cell = first_hit[static_cast<std::size_t>(y.y1) * side + static_cast<std::size_t>(y.y2)];
            if (cell == 0) {
                cell = evaluation;
                record.first_hits.push_back({ y, evaluation });
            }
        }
    };

    Rng rng(seed);
    RunState state = init_run(algorithm, problem, rng, observer);
    {
        auto report = current_report(state);
        attach_indicators(report, state);
        record.trajectory.push_back(report);
    }
    while (!state.archive.is_front_complete() && state.evaluations < options.budget) {
        auto report = step_generation(state, options.lambda, rng);
        if (report.generation % options.trajectory_stride == 0) {
            attach_indicators(report, state);
            record.trajectory.push_back(report);
        }
    }

    record.evaluations_used = state.evaluations;
    record.completed = state.archive.is_front_complete() && completion <= options.budget;
    record.evaluations_to_front = record.completed ? completion : state.evaluations;
    return record;
}

} // namespace gsemo
