#pragma once

#include <itlab/host.hpp>
#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace itlab
{
    /// C(n, r) as a double (exact for the ranges the censuses accept).
    auto binomial(std::size_t n, std::size_t r) -> double;

    struct CommonNeighbourCensus
    {
        std::size_t max_common = 0;
        std::vector<std::uint32_t> witness;    // an r-subset of A attaining the maximum
        double r_subsets = 0;                  // C(n, r)
    };

    inline constexpr double default_census_budget = 5e7;

    /// Exact maximum number of common neighbours over all r-subsets of A.
    /// Refuses (Error) when C(n, r) exceeds budget: this certifies
    /// constructions, so it never falls back to sampling.
    auto common_neighbour_census(const BipartiteHost & h, std::size_t r,
            double budget = default_census_budget) -> CommonNeighbourCensus;

    /// Maximum over `samples` uniformly random r-subsets of A. A diagnostic
    /// for instances too large for the exhaustive census.
    auto sampled_common_neighbour_census(const BipartiteHost & h, std::size_t r, std::size_t samples,
            std::uint64_t seed) -> CommonNeighbourCensus;

    struct CensusEntry
    {
        std::vector<PartId> parts;
        std::size_t edges = 0;
        bool is_matching = true;
    };

    struct MatchingCensus
    {
        std::vector<CensusEntry> entries;      // in lexicographic order of r-sets
        double total_r_sets = 0;
        bool partial = false;                  // true when r-sets were sampled
        std::size_t min_edges = 0;
        std::size_t max_edges = 0;
        bool all_matchings = true;
    };

    inline constexpr double default_matching_census_budget = 2e6;

    /// For every r-set of parts: the number of edges inside those parts and
    /// whether they are pairwise disjoint. When there are more than `budget`
    /// r-sets, `budget` of them are sampled (seeded) and the result is
    /// flagged partial.
    auto matching_census(const Hypergraph & g, double budget = default_matching_census_budget,
            std::uint64_t seed = 0) -> MatchingCensus;

    struct RegularityCheck
    {
        bool ok = true;
        std::string reason;
    };

    /// The (n, k, r, s)-graph predicate: all parts of size k, and every r-set
    /// of parts induces exactly s edges forming a matching. Needs an
    /// exhaustive census.
    auto check_nkrs(const Hypergraph & g, std::size_t k, std::size_t s,
            double budget = default_matching_census_budget) -> RegularityCheck;
}
