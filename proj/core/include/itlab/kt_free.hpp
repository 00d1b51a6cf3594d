#pragma once

#include <itlab/hypergraph.hpp>
#include <itlab/nibble.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace itlab
{
    enum class InnerSolver
    {
        nibble,
        lll,
        exact,
    };

    struct KtFreeConfig
    {
        InnerSolver solver = InnerSolver::nibble;
        NibbleConfig nibble;
        std::optional<std::size_t> lll_rounds;     // default 50 |E'|
        std::uint64_t exact_budget = 200'000'000;
        std::uint64_t seed = 0;
    };

    struct LocalSearchColouring
    {
        std::vector<std::uint32_t> colour;   // per vertex, in [0, t)
        std::size_t moves = 0;
        std::size_t monochromatic_edges = 0;
    };

    /// Starts from a uniformly random t-colouring and, scanning vertices in
    /// id order, moves any vertex whose own colour class holds more of its
    /// neighbours than the smallest other class into that class (lowest
    /// colour on ties). Every move removes a monochromatic edge, so the
    /// search stops; at the end each vertex has at most d(v)/t neighbours of
    /// its own colour.
    auto local_search_colouring(const Hypergraph & g, std::size_t t, std::uint64_t seed) -> LocalSearchColouring;

    /// Same parts, only the monochromatic edges.
    auto monochromatic_subgraph(const Hypergraph & g, std::span<const std::uint32_t> colour) -> Hypergraph;

    /// True iff some `size` of the given vertices are pairwise adjacent in g.
    auto contains_clique(const Hypergraph & g, std::span<const VertexId> vertices, std::size_t size) -> bool;

    struct KtFreeResult
    {
        std::optional<Transversal> transversal;
        LocalSearchColouring colouring;
        std::string failure;
        std::size_t inner_steps = 0;
        std::size_t inner_resamples = 0;
    };

    /// A transversal of a graph inducing no K_{t+1}: an independent
    /// transversal of the monochromatic subgraph of a locally optimal
    /// t-colouring, so every edge it induces is bichromatic. t = 1 is the
    /// ordinary problem. Throws Error for r != 2 or t = 0.
    auto kt_free_transversal(const Hypergraph & g, std::size_t t, const KtFreeConfig & cfg) -> KtFreeResult;
}
