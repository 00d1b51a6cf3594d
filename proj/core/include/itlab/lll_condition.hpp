#pragma once

#include <itlab/hypergraph.hpp>

#include <optional>

namespace itlab
{
    struct LllCondition
    {
        bool ok = true;
        std::size_t part_size = 0;
        std::size_t max_dependency = 0;    // bound on the dependency degree
        std::optional<EdgeId> witness;     // an edge attaining it
        double value = 0;                  // e n^-2 (max_dependency + 1)
    };

    /// For graphs with all parts of size n: the event "both ends of e are
    /// picked" depends on at most |V_i| d(V_i) + |V_j| d(V_j) - 2 others, d
    /// the average part degree. Checks e n^-2 (max + 1) <= 1 with absolute
    /// tolerance 1e-12; an edgeless graph passes.
    ///
    /// Throws Error for r != 2 or unequal parts (trim first).
    auto check_lll_condition(const Hypergraph & g) -> LllCondition;
}
