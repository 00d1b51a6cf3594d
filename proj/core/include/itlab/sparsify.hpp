#pragma once

#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace itlab
{
    struct SparsifyResult
    {
        InducedSubgraph sub;
        double d = 0;               // max average part degree of the input
        double retention = 1;       // D^(gamma - 1)
        double d_prime = 0;         // (1 + eps/4) D^gamma
        std::size_t min_size = 0;   // measured on the output
        double max_avg_degree = 0;
        std::size_t local_degree = 0;
        bool verified = false;      // all three targets met
        std::string failed;         // first target missed, if any
        std::size_t attempts = 0;
    };

    inline constexpr std::size_t default_sparsify_retries = 50;

    /// One-step reduction of the local degree for graphs: every vertex is
    /// kept independently with probability D^(gamma - 1). The output is
    /// checked for min part size >= (1 + eps/2) D', average degree <= D' and
    /// local degree <= log^2 D', where D' = (1 + eps/4) D^gamma; failures are
    /// redrawn with derived seeds. With gamma = 1 nothing is removed and the
    /// input is returned as is, verified or not.
    ///
    /// Throws Error for r != 2, gamma outside (0, 1], local degree above
    /// D^(1 - gamma), or when every retry misses a target (the message names
    /// the statistic).
    auto sparsify_local_degree(const Hypergraph & g, double gamma, double eps, std::uint64_t seed,
            std::size_t retries = default_sparsify_retries) -> SparsifyResult;
}
