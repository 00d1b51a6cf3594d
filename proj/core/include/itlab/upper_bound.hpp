#pragma once

#include <itlab/host.hpp>
#include <itlab/hypergraph.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace itlab
{
    /// How a no-independent-transversal instance was obtained.
    struct Provenance
    {
        std::string host_type;             // "projective-plane", "norm-graph", "random-host"
        std::size_t k = 0, r = 0, s = 0;
        std::size_t n = 0, m = 0;          // host sides; n is also the number of parts
        std::optional<std::uint64_t> q;    // field order for the algebraic hosts
        HostCertificate certificate;
        bool pigeonhole = false;           // m (r - 1) < n
        std::size_t host_attempts = 0;
        std::size_t retry_budget = 0;
        std::optional<double> eps;
        std::optional<double> host_constant;
        std::uint64_t seed = 0;
    };

    auto to_json(const Provenance & p) -> nlohmann::json;

    struct UpperBoundOptions
    {
        /// Accuracy of the random-host regime; the host itself is sampled
        /// with eps^2 so that its degree floor (1 - eps^2) s^(1/r) m^(1-1/r)
        /// reaches k.
        double eps = 0.5;

        /// Replaces C in the requirement s >= C log k (0 keeps 10 r eps'^-4
        /// with eps' = eps^2).
        double host_constant = 0.0;
    };

    struct UpperBoundInstance
    {
        Hypergraph graph;
        Provenance provenance;
    };

    /// Builds an (n, k, r, s)-graph with no independent transversal: a host
    /// with m (r - 1) < n, its neighbourhood incidence graph, then padding.
    ///
    /// Supported regimes:
    ///   r = 2, s = 1      projective plane over the smallest prime q >= k
    ///   r = 3, s = 2      norm graph over the smallest prime q >= 3 with q^2 >= 6k
    ///   r in {2, 3}, C log k <= s <= k   random host with
    ///                     n = floor((r - 1 + eps)(k^r / s)^(1/(r-1))),
    ///                     m = floor(n / (r - 1)) - 1
    /// Anything else throws ConstructionError listing these regimes.
    auto assemble_upper_bound_instance(std::size_t k, std::size_t r, std::size_t s, std::uint64_t seed,
            const UpperBoundOptions & options = {}) -> UpperBoundInstance;
}
