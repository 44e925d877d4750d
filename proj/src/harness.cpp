#include "gsemo/harness.hpp"

#include "gsemo/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gsemo {

void validate(RunConfig const& cfg)
{
    if (cfg.runs < 1 || cfg.lambda < 1 || cfg.budget < 1 || cfg.trajectory_stride < 1) {
        throw std::invalid_argument("runs, lambda, budget and stride must all be positive");
    }
    if (cfg.workers < 0) {
        throw std::invalid_argument("workers must be non-negative");
    }
    make_problem(cfg.problem.kind, cfg.problem.n);
}

std::vector<double> BatchResult::completed_evaluations() const
{
    std::vector<double> out;
    for (auto const& r : records) {
        if (r.completed) {
            out.push_back(static_cast<double>(r.evaluations_to_front));
        }
    }
    return out;
}

BatchResult run_batch(RunConfig const& cfg)
{
    validate(cfg);
    const auto runs = static_cast<std::size_t>(cfg.runs);
    const RunOptions options { cfg.lambda, cfg.budget, cfg.trajectory_stride, cfg.capture_first_hits };

    BatchResult batch;
    batch.records.resize(runs);
    std::atomic<std::size_t> next { 0 };
    auto worker = [&] {
        for (auto i = next++; i < runs; i = next++) {
            const auto seed = derive_seed(cfg.base_seed, i);
            auto record = run(cfg.algorithm, cfg.problem, options, seed);
            record.run_id = i;
            batch.records[i] = std::move(record);
        }
    };

    auto workers = cfg.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : static_cast<unsigned>(cfg.workers);
    workers = std::min<unsigned>(workers, static_cast<unsigned>(runs));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    for (auto const& r : batch.records) {
        ++(r.completed ? batch.completed : batch.incomplete);
    }
    const auto evals = batch.completed_evaluations();
    if (!evals.empty()) {
        batch.summary = summarize(evals);
    }
    return batch;
}

std::vector<FirstHitCell> first_hit_grid(std::vector<RunRecord> const& records)
{
    std::map<ObjectiveVector, std::pair<std::size_t, double>> acc;
    for (auto const& r : records) {
        if (!r.first_hits_captured) {
            throw std::logic_error("first_hit_grid: first-hit capture was disabled");
        }
        for (auto const& hit : r.first_hits) {
            auto& [count, sum] = acc[hit.objectives];
            ++count;
            sum += static_cast<double>(hit.evaluation);
        }
    }
    std::vector<FirstHitCell> grid;
    grid.reserve(acc.size());
    for (auto const& [y, entry] : acc) {
        grid.push_back({ y, entry.first, entry.second / static_cast<double>(entry.first) });
    }
    return grid;
}

std::string format_double(double value)
{
    std::array<char, 64> buf {};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc {}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return { buf.data(), ptr };
}

namespace {
    std::ofstream open_for_write(std::filesystem::path const& path)
    {
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            throw std::runtime_error("cannot write " + path.string());
        }
        return os;
    }

    void finish(std::ofstream& os, std::filesystem::path const& path)
    {
        os.flush();
        if (!os) {
            throw std::runtime_error("failed writing " + path.string());
        }
    }
} // namespace

void write_summary_csv(std::filesystem::path const& path, RunConfig const& cfg, BatchResult const& batch)
{
    auto os = open_for_write(path);
    os << "run_id,seed,problem,n,algorithm,metric,lambda,completed,evaluations_to_front\n";
    for (auto const& r : batch.records) {
        os << r.run_id << ',' << r.seed << ',' << to_token(cfg.problem.kind) << ',' << cfg.problem.n << ','
           << to_token(cfg.algorithm.kind) << ',' << to_token(cfg.algorithm.metric) << ',' << cfg.lambda << ','
           << (r.completed ? 1 : 0) << ',' << r.evaluations_to_front << '\n';
    }
    finish(os, path);
}

void write_trajectory_csv(std::filesystem::path const& path, BatchResult const& batch)
{
    auto os = open_for_write(path);
    os << "run_id,generation,evaluations,mutation_rate,archive_size,hv,igd\n";
    for (auto const& r : batch.records) {
        for (auto const& g : r.trajectory) {
            os << r.run_id << ',' << g.generation << ',' << g.evaluations << ',' << format_double(g.mutation_rate)
               << ',' << g.archive_size << ',' << format_double(g.hv) << ',' << format_double(g.igd) << '\n';
        }
    }
    finish(os, path);
}

void write_first_hits_csv(std::filesystem::path const& path, std::vector<FirstHitCell> const& grid)
{
    auto os = open_for_write(path);
    os << "y1,y2,hit_count,mean_first_hit_evaluations\n";
    for (auto const& c : grid) {
        os << c.objectives.y1 << ',' << c.objectives.y2 << ',' << c.hit_count << ',' << format_double(c.mean_first_hit)
           << '\n';
    }
    finish(os, path);
}

void write_metadata(std::filesystem::path const& path, RunConfig const& cfg, BatchResult const& batch)
{
    nlohmann::ordered_json meta;
    meta["version"] = kVersion;
    meta["config"] = {
        { "problem", to_token(cfg.problem.kind) },
        { "n", cfg.problem.n },
        { "algorithm", to_token(cfg.algorithm.kind) },
        { "metric", to_token(cfg.algorithm.metric) },
        { "tie_break", to_token(cfg.algorithm.tie_break) },
        { "lambda", cfg.lambda },
        { "runs", cfg.runs },
        { "base_seed", cfg.base_seed },
        { "budget", cfg.budget },
        { "trajectory_stride", cfg.trajectory_stride },
        { "capture_first_hits", cfg.capture_first_hits },
    };
    meta["rng"] = "mt19937_64";
    meta["seed_derivation"] = "splitmix64(base_seed + run_id * 0x9E3779B97F4A7C15)";
    meta["hv_reference_point"] = { -1, -1 };
    meta["completed_runs"] = batch.completed;
    meta["incomplete_runs"] = batch.incomplete;
    meta["all_completed"] = batch.all_completed();
    if (batch.summary) {
        meta["summary"] = {
            { "mean", batch.summary->mean },
            { "variance", batch.summary->variance },
            { "variance_divisor", kVarianceDivisor },
            { "median", batch.summary->median },
            { "count", batch.summary->count },
        };
    } else {
        meta["summary"] = nullptr;
    }
    auto os = open_for_write(path);
    os << meta.dump(2) << '\n';
    finish(os, path);
}

void export_batch(std::filesystem::path const& dir, RunConfig const& cfg, BatchResult const& batch)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    write_summary_csv(dir / "summary.csv", cfg, batch);
    write_trajectory_csv(dir / "trajectory.csv", batch);
    write_metadata(dir / "metadata.json", cfg, batch);
    if (cfg.capture_first_hits) {
        write_first_hits_csv(dir / "first_hits.csv", first_hit_grid(batch.records));
    }
}

namespace {
    std::vector<std::string> split_csv_line(std::string const& line)
    {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        return fields;
    }

    template <typename T>
    T parse_number(std::string const& text, std::filesystem::path const& path)
    {
        T value {};
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc {} || ptr != text.data() + text.size()) {
            throw std::runtime_error("malformed number '" + text + "' in " + path.string());
        }
        return value;
    }
} // namespace

std::vector<SummaryRow> read_summary_csv(std::filesystem::path const& path)
{
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("empty summary file " + path.string());
    }
    const auto header = split_csv_line(line);
    const std::array<std::string, 9> expected { "run_id", "seed", "problem", "n", "algorithm", "metric", "lambda",
        "completed", "evaluations_to_front" };
    if (!std::equal(header.begin(), header.end(), expected.begin(), expected.end())) {
        throw std::runtime_error("unexpected summary header in " + path.string());
    }
    std::vector<SummaryRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != expected.size()) {
            throw std::runtime_error("wrong field count in " + path.string());
        }
        SummaryRow row;
        row.run_id = parse_number<std::size_t>(f[0], path);
        row.seed = parse_number<std::uint64_t>(f[1], path);
        row.problem = f[2];
        row.n = parse_number<std::size_t>(f[3], path);
        row.algorithm = f[4];
        row.metric = f[5];
        row.lambda = parse_number<int>(f[6], path);
        row.completed = parse_number<int>(f[7], path) != 0;
        row.evaluations_to_front = parse_number<std::int64_t>(f[8], path);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> completed_evaluations(std::vector<SummaryRow> const& rows)
{
    std::vector<double> out;
    for (auto const& r : rows) {
        if (r.completed) {
            out.push_back(static_cast<double>(r.evaluations_to_front));
        }
    }
    return out;
}

} // namespace gsemo
