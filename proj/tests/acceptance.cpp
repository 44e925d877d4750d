// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--workdir DIR] [--seed S] [--workers W]

#include "gsemo/adaptation.hpp"
#include "gsemo/harness.hpp"
#include "gsemo/rng.hpp"

#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace gsemo;
namespace fs = std::filesystem;

namespace {

constexpr double kTolerance = 0.15;
constexpr int kRuns = 100;
constexpr int kLambda = 10;
constexpr std::size_t kN = 100;

struct Context {
    std::uint64_t seed { 1 };
    int workers { 0 };
    fs::path workdir;
    std::map<std::string, BatchResult> cache;
};

std::string fmt(double v, int precision = 0)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

BatchResult const& batch(Context& ctx, ProblemKind problem, AlgorithmKind algo, std::string const& metric = "none",
    std::size_t n = kN)
{
    RunConfig cfg;
    cfg.problem = make_problem(problem, n);
    cfg.algorithm = make_algorithm(algo, parse_metric(metric));
    cfg.lambda = kLambda;
    cfg.runs = kRuns;
    cfg.base_seed = ctx.seed;
    cfg.workers = ctx.workers;
    const std::string key = std::string(to_token(problem)) + "_" + std::string(to_token(algo)) + "_" + metric + "_"
        + std::to_string(n);
    auto it = ctx.cache.find(key);
    if (it == ctx.cache.end()) {
        it = ctx.cache.emplace(key, run_batch(cfg)).first;
        export_batch(ctx.workdir / key, cfg, it->second);
    }
    return it->second;
}

// Mean over completed runs, NaN unless every run completed.
double full_mean(BatchResult const& b)
{
    if (!b.all_completed() || !b.summary) {
        return std::nan("");
    }
    return b.summary->mean;
}

struct Check {
    bool ok { true };
    std::string detail;

    void add(bool pass, std::string const& text)
    {
        ok = ok && pass;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += text + (pass ? "" : " [x]");
    }

    void near_reference(std::string const& label, BatchResult const& b, double reference)
    {
        const double mean = full_mean(b);
        const double dev = (mean - reference) / reference;
        std::string text = label + " " + (std::isnan(mean) ? "incomplete(" + std::to_string(b.incomplete) + ")" : fmt(mean))
            + " vs " + fmt(reference) + " (" + (dev >= 0 ? "+" : "") + fmt(100 * dev, 1) + "%)";
        add(!std::isnan(mean) && std::abs(dev) <= kTolerance, text);
    }
};

bool report(int id, std::string const& title, Check const& c)
{
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " | " << c.detail << std::endl;
    return c.ok;
}

Check criterion1(Context& ctx)
{
    Check c;
    c.near_reference("OneMinMax", batch(ctx, ProblemKind::OneMinMax, AlgorithmKind::Static), 68375);
    c.near_reference("LOTZ", batch(ctx, ProblemKind::Lotz, AlgorithmKind::Static), 340072);
    c.near_reference("COCZ", batch(ctx, ProblemKind::Cocz, AlgorithmKind::Static), 30049);
    return c;
}

Check criterion2(Context& ctx)
{
    Check c;
    c.near_reference("OneMinMax", batch(ctx, ProblemKind::OneMinMax, AlgorithmKind::TwoRate, "hv"), 61624);
    c.near_reference("COCZ", batch(ctx, ProblemKind::Cocz, AlgorithmKind::TwoRate, "hv"), 26921);
    return c;
}

Check criterion3(Context& ctx)
{
    Check c;
    c.near_reference("LOTZ oneobj50", batch(ctx, ProblemKind::Lotz, AlgorithmKind::VarCtrl, "oneobj50"), 263883);
    c.near_reference("LOTZ oneobj", batch(ctx, ProblemKind::Lotz, AlgorithmKind::VarCtrl, "oneobj"), 272628);
    return c;
}

Check criterion4(Context& ctx)
{
    Check c;
    const std::vector<std::pair<ProblemKind, double>> cells { { ProblemKind::OneMinMax, 61618 },
        { ProblemKind::Lotz, 314000 }, { ProblemKind::Cocz, 26844 } };
    for (auto [problem, reference] : cells) {
        const auto& ag = batch(ctx, problem, AlgorithmKind::Agsemo);
        c.near_reference(std::string(to_token(problem)), ag, reference);
    }
    for (auto [problem, reference] : cells) {
        const double ag = full_mean(batch(ctx, problem, AlgorithmKind::Agsemo));
        const double st = full_mean(batch(ctx, problem, AlgorithmKind::Static));
        c.add(ag < st, std::string(to_token(problem)) + " agsemo " + fmt(ag) + " < static " + fmt(st));
    }
    return c;
}

// Two-sided test plus the direction the comparison is about: the adaptive
// algorithm needs fewer evaluations than static GSEMO.
void improvement(Check& c, std::string const& label, BatchResult const& better, BatchResult const& base, double alpha)
{
    const auto a = better.completed_evaluations();
    const auto b = base.completed_evaluations();
    if (a.empty() || b.empty()) {
        c.add(false, label + " no completed runs");
        return;
    }
    const auto mw = mann_whitney_u(a, b);
    const bool faster = summarize(a).mean < summarize(b).mean;
    c.add(mw.p < alpha && faster,
        label + " p=" + sci(mw.p) + " (< " + sci(alpha) + "), " + (faster ? "faster" : "slower") + " than static");
}

Check criterion5(Context& ctx)
{
    Check c;
    improvement(c, "LOTZ var-ctrl oneobj50", batch(ctx, ProblemKind::Lotz, AlgorithmKind::VarCtrl, "oneobj50"),
        batch(ctx, ProblemKind::Lotz, AlgorithmKind::Static), 1e-3);
    for (auto problem : { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz }) {
        improvement(c, std::string(to_token(problem)) + " agsemo", batch(ctx, problem, AlgorithmKind::Agsemo),
            batch(ctx, problem, AlgorithmKind::Static), 0.1);
    }
    return c;
}

Check criterion6()
{
    Check c;
    Rng rng(6);
    int exact = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t count = 1 + rng.uniform_index(20);
        std::vector<ObjectiveVector> pts;
        for (std::size_t i = 0; i < count; ++i) {
            pts.push_back({ static_cast<std::int64_t>(rng.uniform_index(51)),
                static_cast<std::int64_t>(rng.uniform_index(51)) });
        }
        exact += hypervolume_2d(pts) == static_cast<double>(oracle::grid_hypervolume(pts));
    }
    c.add(exact == 200, std::to_string(exact) + "/200 fronts equal to grid counting");
    return c;
}

Check criterion7()
{
    Check c;
    int archive_cases = 0;
    int archive_ok = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        for (auto k : { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz }) {
            if (k == ProblemKind::Cocz && n % 2 != 0) {
                continue;
            }
            const auto p = make_problem(k, n);
            Archive arch(p);
            for (std::uint64_t m = 0; m < (std::uint64_t { 1 } << n); ++m) {
                Individual ind { oracle::bits_of(m, n), {}, 1.0, 0 };
                ind.objectives = evaluate(p, ind.genotype);
                arch.try_insert(std::move(ind));
            }
            ++archive_cases;
            archive_ok += arch.objective_vectors() == oracle::brute_force_front(p);
        }
    }
    c.add(archive_ok == archive_cases,
        "archive " + std::to_string(archive_ok) + "/" + std::to_string(archive_cases) + " (n <= 10)");

    int front_cases = 0;
    int front_ok = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (auto k : { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz }) {
            if (k == ProblemKind::Cocz && n % 2 != 0) {
                continue;
            }
            const auto p = make_problem(k, n);
            ++front_cases;
            front_ok += pareto_front(p) == oracle::brute_force_front(p);
        }
    }
    c.add(front_ok == front_cases,
        "pareto_front " + std::to_string(front_ok) + "/" + std::to_string(front_cases) + " (n <= 12)");
    return c;
}

Check criterion8()
{
    Check c;
    for (std::size_t n : { 2, 10, 100 }) {
        const auto front = pareto_front(make_problem(ProblemKind::OneMinMax, n));
        const double hv = hypervolume_2d(front);
        const double expected = static_cast<double>((n + 1) * (n + 2) / 2);
        c.add(hv == expected, "n=" + std::to_string(n) + " HV " + fmt(hv) + " = " + fmt(expected));
    }
    return c;
}

Check criterion9()
{
    Check c;
    const int n = 20;
    const double p = 0.1;
    const long draws = 100000;
    Rng rng(9);
    std::vector<long> observed(n + 1, 0);
    for (long i = 0; i < draws; ++i) {
        ++observed[sample_binomial_gt0(n, p, rng)];
    }
    // adjacent cells are merged until each expects at least 5 draws
    const double norm = 1.0 - std::pow(1.0 - p, n);
    std::vector<std::pair<double, double>> cells;
    double obs = 0;
    double expected = 0;
    for (int k = 1; k <= n; ++k) {
        const double pmf = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)
            + k * std::log(p) + (n - k) * std::log1p(-p));
        obs += static_cast<double>(observed[k]);
        expected += pmf / norm * draws;
        if (expected >= 5.0) {
            cells.emplace_back(obs, expected);
            obs = 0;
            expected = 0;
        }
    }
    cells.back().first += obs;
    cells.back().second += expected;
    double stat = 0;
    for (auto [o, e] : cells) {
        stat += (o - e) * (o - e) / e;
    }
    const boost::math::chi_squared dist(static_cast<double>(cells.size() - 1));
    const double critical = boost::math::quantile(boost::math::complement(dist, 0.001));
    c.add(observed[0] == 0 && stat < critical,
        "Bin>0(20, 0.1) chi2=" + fmt(stat, 2) + " < " + fmt(critical, 2) + " (df " + std::to_string(cells.size() - 1)
            + ")");

    int exact = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        const auto len = 2 + rng.uniform_index(199);
        const int count = 1 + static_cast<int>(rng.uniform_index(len));
        const auto x = Bitstring::random(len, rng);
        exact += hamming_distance(x, flip(x, count, rng)) == static_cast<std::size_t>(count);
    }
    c.add(exact == 10000, "flip " + std::to_string(exact) + "/10000 exact Hamming distance");
    return c;
}

Check criterion10(Context& ctx)
{
    Check c;
    const fs::path dir = ctx.workdir / "determinism";
    fs::remove_all(dir);
    auto invoke = [&](std::string const& name, int workers) {
        const std::string cmd = std::string("\"") + GSEMO_CLI_PATH + "\" run --problem oneminmax --algo two-rate"
            + " --metric hv --n 100 --lambda 10 --runs 100 --seed " + std::to_string(ctx.seed) + " --workers "
            + std::to_string(workers) + " --out \"" + (dir / name).string() + "\" > /dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    auto slurp = [](fs::path const& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const bool ran = invoke("first", 1) && invoke("second", 1) && invoke("parallel", 8);
    if (!ran) {
        c.add(false, "CLI invocation failed");
        return c;
    }
    const auto a = slurp(dir / "first" / "summary.csv");
    c.add(!a.empty() && a == slurp(dir / "second" / "summary.csv"), "two invocations byte-identical");
    c.add(!a.empty() && a == slurp(dir / "parallel" / "summary.csv"), "workers 1 vs 8 byte-identical");
    return c;
}

Check criterion11(Context& ctx)
{
    Check c;
    std::vector<double> means;
    for (std::size_t n : { 25, 50, 100 }) {
        means.push_back(full_mean(batch(ctx, ProblemKind::OneMinMax, AlgorithmKind::Static, "none", n)));
    }
    c.add(means[1] / means[0] > 2.0, "n=25->50 " + fmt(means[0]) + " -> " + fmt(means[1]) + " ratio " + fmt(means[1] / means[0], 2));
    c.add(means[2] / means[1] > 2.0, "n=50->100 " + fmt(means[1]) + " -> " + fmt(means[2]) + " ratio " + fmt(means[2] / means[1], 2));
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    Context ctx;
    std::string workdir = (fs::temp_directory_path() / "gsemo_acceptance").string();
    CLI::App app { "Acceptance criteria" };
    app.add_option("--workdir", workdir, "Directory for exported batches");
    app.add_option("--seed", ctx.seed, "Base seed for every batch");
    app.add_option("--workers", ctx.workers, "Worker threads (0 = all cores)");
    CLI11_PARSE(app, argc, argv);
    ctx.workdir = workdir;
    fs::create_directories(ctx.workdir);

    int failed = 0;
    failed += !report(1, "static GSEMO means", criterion1(ctx));
    failed += !report(2, "two-rate GSEMO with HV", criterion2(ctx));
    failed += !report(3, "var-ctrl GSEMO with OneObj on LOTZ", criterion3(ctx));
    failed += !report(4, "AGSEMO means and improvement over static", criterion4(ctx));
    failed += !report(5, "Mann-Whitney comparisons against static", criterion5(ctx));
    failed += !report(6, "hypervolume vs grid oracle", criterion6());
    failed += !report(7, "archive and front vs brute force", criterion7());
    failed += !report(8, "OneMinMax hypervolume closed form", criterion8());
    failed += !report(9, "sampler correctness", criterion9());
    failed += !report(10, "determinism", criterion10(ctx));
    failed += !report(11, "static GSEMO scaling on OneMinMax", criterion11(ctx));
    std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
