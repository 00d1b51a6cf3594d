#include <itlab/trajectory.hpp>

#include <cmath>

namespace itlab
{
    auto trajectory_report(const NibbleResult & run, const TrajectoryConfig & cfg) -> TrajectoryReport
    {
        TrajectoryReport report;
        auto size_target = run.p / (1.0 + 3.0 * run.eps / 4.0);
        auto degree_target = run.p / (1.0 + run.eps / 4.0);
        std::size_t size_ok = 0;
        std::size_t degree_ok = 0;
        for (std::size_t i = 1; i < run.trajectory.size(); ++i) {
            const auto & rec = run.trajectory[i];
            StepDiagnostic d;
            d.step = rec.step;
            d.size_shrinkage = 1.0 - rec.size_retention;
            d.size_target = size_target;
            d.size_within = std::abs(rec.size_retention - (1.0 - size_target)) <= cfg.tolerance * (1.0 - size_target);
            d.degree_shrinkage = 1.0 - rec.degree_retention;
            d.degree_target = degree_target;
            d.degree_within = rec.degree_retention <= (1.0 + cfg.tolerance) * (1.0 - degree_target);
            d.degree_bound_exceeded = rec.degree_bound_exceeded;
            d.size_bound_exceeded = rec.size_bound_exceeded;
            size_ok += d.size_within ? 1 : 0;
            degree_ok += d.degree_within ? 1 : 0;
            report.flagged_steps += d.degree_bound_exceeded ? 1 : 0;
            report.steps.push_back(d);
        }
        if (! report.steps.empty()) {
            auto n = static_cast<double>(report.steps.size());
            report.size_within_fraction = static_cast<double>(size_ok) / n;
            report.degree_within_fraction = static_cast<double>(degree_ok) / n;
        }
        report.completed = run.status == NibbleStatus::success;
        report.terminal_ratio = run.final_ratio ? *run.final_ratio : 0.0;
        report.completion_ratio = run.completion_ratio;
        report.terminal_ratio_ok = report.terminal_ratio >= run.completion_ratio;
        return report;
    }

    namespace
    {
        auto number(double x) -> nlohmann::json
        {
            if (std::isfinite(x))
                return x;
            return x > 0 ? "inf" : "-inf";
        }
    }

    auto to_json(const NibbleStepRecord & r) -> nlohmann::json
    {
        return nlohmann::json{
            {"step", r.step},
            {"active_parts", r.active_parts},
            {"transversal_size", r.transversal_size},
            {"min_size", r.min_size},
            {"max_avg_degree", number(r.max_avg_degree)},
            {"S", number(r.s)},
            {"D", number(r.d)},
            {"size_retention", number(r.size_retention)},
            {"degree_retention", number(r.degree_retention)},
            {"attempts", r.attempts},
            {"size_bound_exceeded", r.size_bound_exceeded},
            {"degree_bound_exceeded", r.degree_bound_exceeded},
            {"ratio_clamped", r.ratio_clamped},
        };
    }

    auto to_json(const TrajectoryReport & t) -> nlohmann::json
    {
        auto steps = nlohmann::json::array();
        for (const auto & d : t.steps)
            steps.push_back({
                {"step", d.step},
                {"size_shrinkage", number(d.size_shrinkage)},
                {"size_target", number(d.size_target)},
                {"size_within", d.size_within},
                {"degree_shrinkage", number(d.degree_shrinkage)},
                {"degree_target", number(d.degree_target)},
                {"degree_within", d.degree_within},
                {"degree_bound_exceeded", d.degree_bound_exceeded},
                {"size_bound_exceeded", d.size_bound_exceeded},
            });
        return nlohmann::json{
            {"steps", steps},
            {"size_within_fraction", t.size_within_fraction},
            {"degree_within_fraction", t.degree_within_fraction},
            {"flagged_steps", t.flagged_steps},
            {"completed", t.completed},
            {"terminal_ratio", number(t.terminal_ratio)},
            {"completion_ratio", t.completion_ratio},
            {"terminal_ratio_ok", t.terminal_ratio_ok},
        };
    }
}
