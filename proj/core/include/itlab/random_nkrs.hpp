#pragma once

#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>

namespace itlab
{
    /// Uniformly random (n, k, r, s)-graph. Part i holds the vertices
    /// i k .. i k + k - 1. For every r-set of parts, in lexicographic order,
    /// s distinct slots are drawn in each part by a Fisher-Yates prefix and
    /// matched position by position, which is uniform over the matchings of
    /// size s. s = 0 gives the edgeless graph.
    ///
    /// Throws Error unless 2 <= r <= n, k >= 1 and s <= k.
    auto random_nkrs(std::size_t n, std::size_t k, std::size_t r, std::size_t s, std::uint64_t seed) -> Hypergraph;
}
