#pragma once

#include <itlab/host.hpp>
#include <itlab/hypergraph.hpp>

#include <cstddef>
#include <cstdint>

namespace itlab
{
    /// Neighbourhood incidence r-graph of a host H: one part {a} x N(a) per
    /// A-vertex a, and an edge {(a_1, b), ..., (a_r, b)} for every r distinct
    /// A-vertices with common neighbour b. Vertex ids run over a, then b,
    /// in increasing order.
    ///
    /// Throws Error when r > |A| or some A-vertex is isolated.
    auto neighbourhood_incidence_graph(const BipartiteHost & h, std::size_t r) -> Hypergraph;

    /// m (r - 1) < n: each B-vertex can serve at most r - 1 parts of an
    /// independent transversal of the incidence graph, so none exists.
    auto verify_no_transversal_by_pigeonhole(const BipartiteHost & h, std::size_t r) -> bool;

    /// Turns g into an exact (n, k, r, s)-graph without creating independent
    /// transversals: vertices are deleted within each part (largest current
    /// degree first, smallest id on ties) until every part has k vertices,
    /// then each r-set of parts with e < s edges receives s - e filler edges,
    /// a uniformly random matching on the vertices its existing edges leave
    /// free. The result is an induced subgraph plus edges, so any
    /// independent transversal of it would be one of g.
    ///
    /// Throws Error when s > k, a part has fewer than k vertices, an edge
    /// meets some part twice, or an r-set of parts already carries more than
    /// s edges or a non-matching.
    auto pad_to_nkrs(const Hypergraph & g, std::size_t k, std::size_t s, std::uint64_t seed) -> Hypergraph;
}
