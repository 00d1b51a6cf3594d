#pragma once

#include <itlab/solve.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace itlab
{
    struct ExperimentConfig
    {
        std::vector<std::size_t> sweep;          // values of n
        std::size_t k = 12, r = 2, s = 1;
        std::size_t trials = 100;
        std::vector<SolverKind> solvers{SolverKind::nibble};
        std::uint64_t seed = 0;
        SolveOptions options;                    // eps, p, max_steps, budget, t; solver and seed are set per run
        bool verify_failures = true;             // run exact_find on instances where a solver failed
        std::uint64_t verify_budget = 5'000'000;
        std::size_t threads = 0;                 // 0: hardware concurrency; ITLAB_THREADS caps it
    };

    /// Parses "n=a..b", "n=a..b:step", "a..b" or "a,b,c". Throws Error.
    auto parse_sweep(std::string_view text) -> std::vector<std::size_t>;

    /// min(requested or hardware concurrency, ITLAB_THREADS when set), at least 1.
    auto experiment_threads(std::size_t requested) -> std::size_t;

    /// Instance seed of a trial: derive_seed(derive_seed(master, n), trial).
    auto trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) -> std::uint64_t;

    struct SolverTrial
    {
        SolverKind solver = SolverKind::exact;
        std::string status;
        bool found = false;
        std::size_t steps = 0;
        std::size_t resamples = 0;
        double wall_ms = 0;
    };

    struct TrialRecord
    {
        std::size_t n = 0;
        std::size_t trial = 0;
        std::uint64_t seed = 0;
        std::vector<SolverTrial> runs;
        std::string verification;   // "it-exists", "no-it", "unknown", or "" when not needed
    };

    struct SolverSummary
    {
        SolverKind solver = SolverKind::exact;
        std::size_t trials = 0;
        std::size_t successes = 0;
        double success_rate = 0;
        double mean_steps = 0;
        double mean_resamples = 0;
        double wall_ms_mean = 0;
        double wall_ms_median = 0;
        double wall_ms_p90 = 0;
        std::size_t failures_with_it = 0;      // exact_find found one
        std::size_t failures_without_it = 0;   // exact_find proved none
        std::size_t failures_unverified = 0;
    };

    struct PointSummary
    {
        std::size_t n = 0;
        std::size_t trials = 0;
        double first_moment_log = 0;
        double expected_count = 0;
        std::vector<SolverSummary> solvers;
    };

    struct ExperimentReport
    {
        ExperimentConfig config;
        std::size_t threads = 1;
        std::vector<PointSummary> points;
        std::vector<TrialRecord> trials;       // ordered by (n, trial)
    };

    /// Runs every solver on `trials` seeded random (n, k, r, s)-graphs per
    /// sweep point. Trials may run concurrently; the report does not depend
    /// on the thread count.
    auto run_experiment(const ExperimentConfig & config) -> ExperimentReport;

    auto to_json(const ExperimentReport & report) -> nlohmann::json;

    /// n, expected_count, first_moment_log, solver, success_rate, one row per
    /// (point, solver).
    auto to_csv(const ExperimentReport & report) -> std::string;
}
