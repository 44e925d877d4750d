#pragma once

#include "gsemo/algorithms.hpp"
#include "gsemo/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gsemo {

/// One experiment cell. Defaults: n = 100, lambda = 10, 100 runs,
/// budget 10^7 evaluations, trajectory stride 50 generations.
struct RunConfig {
    Problem problem { ProblemKind::OneMinMax, 100 };
    AlgorithmSpec algorithm {};
    int lambda { 10 };
    int runs { 100 };
    std::uint64_t base_seed { 0 };
    std::int64_t budget { kDefaultBudget };
    int trajectory_stride { 50 };
    bool capture_first_hits { false };
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    /// Results do not depend on it.
    int workers { 1 };
};

/// Throws std::invalid_argument on a non-positive runs/lambda/budget/stride.
void validate(RunConfig const& cfg);

struct BatchResult {
    /// Sorted by run_id.
    std::vector<RunRecord> records;
    /// Over completed runs only; empty if no run completed.
    std::optional<SampleSummary> summary;
    std::size_t completed { 0 };
    std::size_t incomplete { 0 };

    /// True when every run reached the full front.
    bool all_completed() const noexcept { return incomplete == 0; }
    std::vector<double> completed_evaluations() const;
};

/// Runs cfg.runs independent runs; run i uses seed derive_seed(base_seed, i).
BatchResult run_batch(RunConfig const& cfg);

struct FirstHitCell {
    ObjectiveVector objectives;
    std::size_t hit_count { 0 };
    double mean_first_hit { 0.0 };
};

/// Mean first-hit evaluation per objective vector over the runs that hit it,
/// sorted by (y1, y2). Throws std::logic_error when first hits were not captured.
std::vector<FirstHitCell> first_hit_grid(std::vector<RunRecord> const& records);

void write_summary_csv(std::filesystem::path const& path, RunConfig const& cfg, BatchResult const& batch);
void write_trajectory_csv(std::filesystem::path const& path, BatchResult const& batch);
void write_first_hits_csv(std::filesystem::path const& path, std::vector<FirstHitCell> const& grid);
void write_metadata(std::filesystem::path const& path, RunConfig const& cfg, BatchResult const& batch);

/// Writes summary.csv, trajectory.csv, metadata.json and, when first hits were
/// captured, first_hits.csv into `dir` (created if needed). Throws
/// std::runtime_error if a file cannot be written.
void export_batch(std::filesystem::path const& dir, RunConfig const& cfg, BatchResult const& batch);

struct SummaryRow {
    std::size_t run_id { 0 };
    std::uint64_t seed { 0 };
    std::string problem;
    std::size_t n { 0 };
    std::string algorithm;
    std::string metric;
    int lambda { 0 };
    bool completed { false };
    std::int64_t evaluations_to_front { 0 };
};

/// Parses a summary.csv. Throws std::runtime_error on malformed input.
std::vector<SummaryRow> read_summary_csv(std::filesystem::path const& path);

/// evaluations_to_front of the completed rows.
std::vector<double> completed_evaluations(std::vector<SummaryRow> const& rows);

/// Shortest decimal form that round-trips.
std::string format_double(double value);

} // namespace gsemo
