#include "gsemo/harness.hpp"
#include "gsemo/stats.hpp"
#include "gsemo/version.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace gsemo;

namespace {

struct Cell {
    ProblemKind problem;
    AlgorithmKind algorithm;
    Metric metric;
};

std::string cell_name(Cell const& c)
{
    std::string name = std::string(to_token(c.problem)) + "_" + std::string(to_token(c.algorithm));
    if (c.metric.kind != MetricKind::None) {
        name += "_" + to_token(c.metric);
    }
    return name;
}

void print_summary(std::ostream& os, BatchResult const& batch)
{
    os << "completed=" << batch.completed << " incomplete=" << batch.incomplete;
    if (batch.summary) {
        os << " mean=" << format_double(batch.summary->mean) << " variance=" << format_double(batch.summary->variance)
           << " median=" << format_double(batch.summary->median);
    }
    if (!batch.all_completed()) {
        os << " [WARNING: mean over completed runs only]";
    }
    os << '\n';
}

struct SuiteOptions {
    int runs { 100 };
    int n { 100 };
    int lambda { 10 };
    std::int64_t budget { kDefaultBudget };
    TieBreak tie_break { TieBreak::First };
    int workers { 1 };
};

int run_suite(std::string const& which, std::uint64_t seed, fs::path const& out, SuiteOptions const& opt)
{
    const std::vector<ProblemKind> problems { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz };
    std::vector<Cell> cells;
    for (auto p : problems) {
        cells.push_back({ p, AlgorithmKind::Static, {} });
        if (which == "table1") {
            for (auto a : { AlgorithmKind::TwoRate, AlgorithmKind::LogNormal, AlgorithmKind::VarCtrl }) {
                for (auto m : { "hv", "igd", "oneobj", "oneobj10", "oneobj50" }) {
                    cells.push_back({ p, a, parse_metric(m) });
                }
            }
        } else {
            cells.push_back({ p, AlgorithmKind::Agsemo, {} });
        }
    }

    fs::create_directories(out);
    std::ofstream table(out / (which + ".csv"));
    table << "problem,n,algorithm,metric,lambda,runs,completed,mean,variance,median,u_vs_static,p_vs_static\n";

    std::vector<double> static_evals;
    for (auto const& cell : cells) {
        RunConfig cfg;
        cfg.problem = make_problem(cell.problem, static_cast<std::size_t>(opt.n));
        cfg.algorithm = make_algorithm(cell.algorithm, cell.metric, opt.tie_break);
        cfg.lambda = opt.lambda;
        cfg.runs = opt.runs;
        cfg.base_seed = seed;
        cfg.budget = opt.budget;
        cfg.workers = opt.workers;
        const auto batch = run_batch(cfg);
        export_batch(out / cell_name(cell), cfg, batch);

        const auto evals = batch.completed_evaluations();
        std::string u_text = "";
        std::string p_text = "";
        if (cell.algorithm == AlgorithmKind::Static) {
            static_evals = evals;
        } else if (!evals.empty() && !static_evals.empty()) {
            const auto mw = mann_whitney_u(evals, static_evals);
            u_text = format_double(mw.u);
            p_text = format_double(mw.p);
        }
        table << to_token(cell.problem) << ',' << opt.n << ',' << to_token(cell.algorithm) << ','
              << to_token(cfg.algorithm.metric) << ',' << opt.lambda << ',' << opt.runs << ',' << batch.completed << ','
              << (batch.summary ? format_double(batch.summary->mean) : "") << ','
              << (batch.summary ? format_double(batch.summary->variance) : "") << ','
              << (batch.summary ? format_double(batch.summary->median) : "") << ',' << u_text << ',' << p_text << '\n';
        table.flush();

        std::cout << cell_name(cell) << ": ";
        print_summary(std::cout, batch);
        if (!p_text.empty()) {
            std::cout << "  vs static: U=" << u_text << " p=" << p_text << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "GSEMO variants with self-adaptive mutation on bi-objective pseudo-Boolean benchmarks" };
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a batch of independent runs of one configuration");
    std::string problem_tok = "oneminmax";
    std::string algo_tok = "static";
    std::string metric_tok = "none";
    int n = 100;
    int lambda = 10;
    int runs = 100;
    std::uint64_t seed = 0;
    std::int64_t budget = kDefaultBudget;
    int stride = 50;
    bool first_hits = false;
    int workers = 1;
    std::string tie_tok = "first";
    std::string out_dir;
    run_cmd->add_option("--problem", problem_tok, "oneminmax | lotz | cocz")->required();
    run_cmd->add_option("--algo", algo_tok, "static | two-rate | log-normal | var-ctrl | agsemo")->required();
    run_cmd->add_option("--metric", metric_tok, "hv | igd | oneobj | oneobj10 | oneobj50");
    run_cmd->add_option("--n", n, "Problem dimension")->capture_default_str();
    run_cmd->add_option("--lambda", lambda, "Offspring per generation")->capture_default_str();
    run_cmd->add_option("--runs", runs, "Independent runs")->capture_default_str();
    run_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    run_cmd->add_option("--budget", budget, "Evaluation budget per run")->capture_default_str();
    run_cmd->add_option("--stride", stride, "Generations between trajectory rows")->capture_default_str();
    run_cmd->add_option("--tie-break", tie_tok, "Best-offspring tie rule: first | random")->capture_default_str();
    run_cmd->add_flag("--first-hits", first_hits, "Record first-hit evaluations per objective vector");
    run_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();
    run_cmd->add_option("--out", out_dir, "Output directory")->required();

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "Run every cell of table1 or table2");
    std::string which;
    std::uint64_t suite_seed = 0;
    std::string suite_out;
    SuiteOptions suite_opt;
    std::string suite_tie_tok = "first";
    suite_cmd->add_option("table", which, "table1 | table2")->required()->check(CLI::IsMember({ "table1", "table2" }));
    suite_cmd->add_option("--seed", suite_seed, "Base seed")->capture_default_str();
    suite_cmd->add_option("--out", suite_out, "Output directory")->required();
    suite_cmd->add_option("--runs", suite_opt.runs, "Runs per cell")->capture_default_str();
    suite_cmd->add_option("--n", suite_opt.n, "Problem dimension")->capture_default_str();
    suite_cmd->add_option("--lambda", suite_opt.lambda, "Offspring per generation")->capture_default_str();
    suite_cmd->add_option("--budget", suite_opt.budget, "Evaluation budget per run")->capture_default_str();
    suite_cmd->add_option("--tie-break", suite_tie_tok, "Best-offspring tie rule: first | random")->capture_default_str();
    suite_cmd->add_option("--workers", suite_opt.workers, "Worker threads (0 = all cores)")->capture_default_str();

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Mann-Whitney U test between two summary.csv files");
    std::string file_a;
    std::string file_b;
    stats_cmd->add_option("summaryA", file_a)->required();
    stats_cmd->add_option("summaryB", file_b)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            RunConfig cfg;
            cfg.problem = make_problem(parse_problem_kind(problem_tok), static_cast<std::size_t>(n));
            cfg.algorithm = make_algorithm(parse_algorithm_kind(algo_tok), parse_metric(metric_tok), parse_tie_break(tie_tok));
            cfg.lambda = lambda;
            cfg.runs = runs;
            cfg.base_seed = seed;
            cfg.budget = budget;
            cfg.trajectory_stride = stride;
            cfg.capture_first_hits = first_hits;
            cfg.workers = workers;
            const auto batch = run_batch(cfg);
            export_batch(out_dir, cfg, batch);
            print_summary(std::cout, batch);
            return 0;
        }
        if (*suite_cmd) {
            suite_opt.tie_break = parse_tie_break(suite_tie_tok);
            return run_suite(which, suite_seed, suite_out, suite_opt);
        }
        if (*stats_cmd) {
            const auto a = completed_evaluations(read_summary_csv(file_a));
            const auto b = completed_evaluations(read_summary_csv(file_b));
            const auto sa = summarize(a);
            const auto sb = summarize(b);
            const auto mw = mann_whitney_u(a, b);
            std::cout << "A: count=" << sa.count << " mean=" << format_double(sa.mean)
                      << " variance=" << format_double(sa.variance) << '\n';
            std::cout << "B: count=" << sb.count << " mean=" << format_double(sb.mean)
                      << " variance=" << format_double(sb.variance) << '\n';
            std::cout << "U=" << format_double(mw.u) << " p=" << format_double(mw.p) << '\n';
            return 0;
        }
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
