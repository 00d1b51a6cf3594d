#pragma once

#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>

namespace itlab
{
    struct LllResult
    {
        bool success = false;
        Transversal transversal;    // last assignment; independent iff success
        std::size_t resamples = 0;
    };

    /// Moser-Tardos resampling for graphs (r = 2): one uniform vertex per
    /// part, then, while some edge has both ends picked, the lowest-indexed
    /// such edge has both of its parts redrawn. Gives up after max_rounds
    /// resamplings.
    ///
    /// Throws Error for r != 2 or an empty part.
    auto lll_sample(const Hypergraph & g, std::size_t max_rounds, std::uint64_t seed) -> LllResult;

    /// Default round budget: 50 per edge, at least 100.
    auto default_lll_rounds(const Hypergraph & g) -> std::size_t;
}
