#pragma once

#include <itlab/hypergraph.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace itlab
{
    enum class SolverKind
    {
        exact,
        greedy,
        lll,
        nibble,
        ktfree,
    };

    auto to_string(SolverKind kind) -> std::string_view;

    /// Throws Error for an unknown name.
    auto parse_solver(std::string_view name) -> SolverKind;

    struct SolveOptions
    {
        SolverKind solver = SolverKind::exact;
        std::uint64_t seed = 0;
        double eps = 0.5;
        std::optional<double> p;                // nibble activation probability
        std::optional<std::size_t> max_steps;   // nibble t*
        std::optional<std::uint64_t> budget;    // exact placements / lll rounds
        std::size_t t = 2;                      // ktfree colour count
    };

    struct SolveOutcome
    {
        std::string status;                     // "found", "none", "budget-exhausted", "failure"
        std::optional<Transversal> transversal;
        std::size_t steps = 0;
        std::size_t resamples = 0;
        nlohmann::json trajectory = nlohmann::json::array();
        nlohmann::json details = nlohmann::json::object();

        auto found() const -> bool { return transversal.has_value(); }
    };

    /// Runs one solver. Every returned transversal has been checked with
    /// is_independent_transversal.
    auto solve(const Hypergraph & g, const SolveOptions & options) -> SolveOutcome;

    /// {status, transversal, steps, trajectory, resamples, details}.
    auto to_json(const SolveOutcome & outcome) -> nlohmann::json;
}
