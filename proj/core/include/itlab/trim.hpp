#pragma once

#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <vector>

namespace itlab
{
    struct TrimResult
    {
        InducedSubgraph sub;
        double d = 0;          // max average part degree of the input
        double d_prime = 0;    // D / (1 - eps / 8)
        std::vector<std::size_t> removed;   // per part
    };

    /// Removes from every part the vertices of degree > 8D/eps, where D is
    /// the largest average part degree. Needs |V_i| >= (1 + eps) D for every
    /// part; the result is checked to satisfy |V_i'| >= (1 + eps/2) D',
    /// average degree <= D' and maximum degree <= 8D'/eps, with at most
    /// eps |V_i| / 8 vertices removed from part i.
    ///
    /// Throws Error naming the offending part when the precondition or a
    /// post-check fails.
    auto max_degree_trim(const Hypergraph & g, double eps) -> TrimResult;
}
