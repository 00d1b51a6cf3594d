#pragma once

#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace itlab
{
    /// Plain undirected graph on vertices 0..n-1.
    struct SimpleGraph
    {
        std::size_t num_vertices = 0;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    };

    struct VertexColourGraph
    {
        Hypergraph graph;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> labels;   // vertex -> (base vertex, colour)
    };

    /// One part per base vertex v holding the pairs (v, c), c in L_v (sorted
    /// by colour), and an edge (v, c)(w, c) for every base edge vw and common
    /// colour c. Independent transversals are exactly the proper list
    /// colourings.
    ///
    /// Throws Error for an empty list, a repeated colour in a list, a list
    /// count different from the vertex count, or a loop / out-of-range edge.
    auto build_vertex_colour_graph(const SimpleGraph & base,
            const std::vector<std::vector<std::uint32_t>> & lists) -> VertexColourGraph;

    /// Colour of every base vertex under the transversal.
    auto colouring_of(const VertexColourGraph & vc, const Transversal & t) -> std::vector<std::uint32_t>;

    /// Number of proper colourings with c(v) in L_v, by direct enumeration.
    auto count_list_colourings(const SimpleGraph & base, const std::vector<std::vector<std::uint32_t>> & lists)
        -> std::uint64_t;
}
