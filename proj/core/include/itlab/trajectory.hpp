#pragma once

#include <itlab/nibble.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <vector>

namespace itlab
{
    struct TrajectoryConfig
    {
        double tolerance = 0.05;   // relative, on the per-step retention factors
    };

    struct StepDiagnostic
    {
        std::size_t step = 0;
        double size_shrinkage = 0;       // 1 - measured size retention
        double size_target = 0;          // p / (1 + 3 eps / 4)
        bool size_within = true;
        double degree_shrinkage = 0;     // 1 - measured degree retention
        double degree_target = 0;        // p / (1 + eps / 4)
        bool degree_within = true;       // retention <= (1 + tol)(1 - target)
        bool degree_bound_exceeded = false;
        bool size_bound_exceeded = false;
    };

    struct TrajectoryReport
    {
        std::vector<StepDiagnostic> steps;
        double size_within_fraction = 1;
        double degree_within_fraction = 1;
        std::size_t flagged_steps = 0;   // measured average degree above D(t)
        bool completed = false;
        double terminal_ratio = 0;
        double completion_ratio = 0;
        bool terminal_ratio_ok = false;
    };

    /// Compares every accepted step of a nibble run with the shrinkage the
    /// S(t), D(t) recursions prescribe.
    auto trajectory_report(const NibbleResult & run, const TrajectoryConfig & cfg = {}) -> TrajectoryReport;

    auto to_json(const TrajectoryReport & t) -> nlohmann::json;
    auto to_json(const NibbleStepRecord & r) -> nlohmann::json;
}
