#pragma once

#include <itlab/hypergraph.hpp>

#include <optional>

namespace itlab
{
    struct GreedyResult
    {
        std::optional<Transversal> transversal;
        std::optional<PartId> stuck_part;   // first part left without a usable vertex
    };

    /// Baseline: parts in ascending order of size; in each, the unblocked
    /// vertex of smallest degree (ties by id) is picked, and every vertex that
    /// would complete an edge with the picks so far is blocked.
    auto greedy_find(const Hypergraph & g) -> GreedyResult;
}
