#pragma once

#include <itlab/hypergraph.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace itlab
{
    enum class ExactStatus
    {
        found,
        none,
        budget_exhausted,
    };

    auto to_string(ExactStatus status) -> std::string_view;

    struct ExactResult
    {
        ExactStatus status = ExactStatus::none;
        std::optional<Transversal> transversal;
        std::uint64_t nodes = 0;   // vertex placements made by the search
    };

    inline constexpr std::uint64_t default_exact_budget = 200'000'000;

    /// Depth-first search for an independent transversal. Parts are taken in
    /// ascending order of size (ties by index) and vertices in ascending id.
    /// Once r - 1 vertices of an edge are placed its last vertex is blocked,
    /// and a branch is cut as soon as some unplaced part has no unblocked
    /// vertex left. Works for every uniformity.
    ///
    /// `none` means the whole tree was exhausted; `budget_exhausted` means
    /// more than `budget` placements were needed.
    auto exact_find(const Hypergraph & g, std::uint64_t budget = default_exact_budget) -> ExactResult;

    struct TransversalCount
    {
        std::uint64_t count = 0;
        bool saturated = false;    // stopped at the cap
        std::uint64_t nodes = 0;
    };

    /// Number of independent transversals, by the same search. Stops once
    /// `cap` have been found.
    auto count_transversals(const Hypergraph & g,
            std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) -> TransversalCount;
}
