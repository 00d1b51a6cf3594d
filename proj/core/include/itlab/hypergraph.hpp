#pragma once

#include <itlab/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace itlab
{
    using VertexId = std::uint32_t;
    using PartId = std::uint32_t;
    using EdgeId = std::uint32_t;

    inline constexpr VertexId no_vertex = std::numeric_limits<VertexId>::max();

    /// An r-uniform hypergraph together with a partition of its vertex set.
    ///
    /// Vertices are the dense ids 0..N-1 and every one of them belongs to
    /// exactly one part. Parts may be empty and may have unequal sizes. On
    /// construction the vertex list of every part is sorted, each edge is
    /// sorted, and the edge list is sorted lexicographically, so two
    /// instances with the same structure compare equal.
    ///
    /// Instances are immutable; derived instances are built with induced().
    class Hypergraph
    {
    public:
        /// Validates and normalises. Throws Error when a vertex is missing,
        /// duplicated, or out of range, when an edge has the wrong size,
        /// repeats a vertex, lies inside a single part, or is a duplicate.
        Hypergraph(std::size_t uniformity, std::vector<std::vector<VertexId>> parts,
                std::vector<std::vector<VertexId>> edges);

        /// Edgeless instance with the given parts.
        static auto edgeless(std::size_t uniformity, std::vector<std::vector<VertexId>> parts) -> Hypergraph;

        auto uniformity() const -> std::size_t { return _uniformity; }
        auto num_parts() const -> std::size_t { return _parts.size(); }
        auto num_vertices() const -> std::size_t { return _part_of.size(); }
        auto num_edges() const -> std::size_t { return _num_edges; }

        auto part(PartId i) const -> std::span<const VertexId> { return _parts[i]; }
        auto parts() const -> const std::vector<std::vector<VertexId>> & { return _parts; }
        auto part_of(VertexId v) const -> PartId { return _part_of[v]; }

        auto edge(EdgeId e) const -> std::span<const VertexId>
        {
            return {_edge_vertices.data() + std::size_t{e} * _uniformity, _uniformity};
        }

        auto incident_edges(VertexId v) const -> std::span<const EdgeId>
        {
            return {_incidence.data() + _incidence_offsets[v], _incidence_offsets[v + 1] - _incidence_offsets[v]};
        }

        /// Vertices sharing at least one edge with v, sorted, without repeats.
        auto neighbours(VertexId v) const -> std::span<const VertexId>
        {
            return {_neighbours.data() + _neighbour_offsets[v], _neighbour_offsets[v + 1] - _neighbour_offsets[v]};
        }

        /// Number of edges containing v.
        auto degree(VertexId v) const -> std::size_t { return _incidence_offsets[v + 1] - _incidence_offsets[v]; }

        auto max_degree() const -> std::size_t;

        /// Edges as vectors, in canonical order.
        auto edge_list() const -> std::vector<std::vector<VertexId>>;

        friend auto operator==(const Hypergraph & a, const Hypergraph & b) -> bool
        {
            return a._uniformity == b._uniformity && a._parts == b._parts && a._edge_vertices == b._edge_vertices;
        }

    private:
        std::size_t _uniformity;
        std::vector<std::vector<VertexId>> _parts;
        std::vector<PartId> _part_of;
        std::size_t _num_edges = 0;
        std::vector<VertexId> _edge_vertices;
        std::vector<std::size_t> _incidence_offsets;
        std::vector<EdgeId> _incidence;
        std::vector<std::size_t> _neighbour_offsets;
        std::vector<VertexId> _neighbours;
    };

    /// A choice of at most one vertex per part.
    class Transversal
    {
    public:
        Transversal() = default;
        explicit Transversal(std::size_t num_parts) : _chosen(num_parts, no_vertex) {}

        auto num_parts() const -> std::size_t { return _chosen.size(); }

        auto assign(PartId i, VertexId v) -> void { _chosen[i] = v; }
        auto clear(PartId i) -> void { _chosen[i] = no_vertex; }

        auto at(PartId i) const -> std::optional<VertexId>
        {
            return _chosen[i] == no_vertex ? std::nullopt : std::optional{_chosen[i]};
        }

        auto is_assigned(PartId i) const -> bool { return _chosen[i] != no_vertex; }
        auto assigned_count() const -> std::size_t;
        auto is_complete() const -> bool { return assigned_count() == _chosen.size(); }

        /// Raw view; unassigned parts hold no_vertex.
        auto chosen() const -> std::span<const VertexId> { return _chosen; }

        /// Assigned vertices in part order.
        auto vertices() const -> std::vector<VertexId>;

        friend auto operator==(const Transversal &, const Transversal &) -> bool = default;

    private:
        std::vector<VertexId> _chosen;
    };

    struct PartStats
    {
        PartId part_index = 0;
        std::size_t size = 0;
        Rational avg_degree;
        std::size_t max_degree = 0;
    };

    /// Average number of edges containing a vertex of part i. Exact.
    /// Throws Error("degenerate part") when the part is empty.
    auto avg_degree_of_part(const Hypergraph & g, PartId i) -> Rational;

    /// Sum of vertex degrees over part i.
    auto degree_sum_of_part(const Hypergraph & g, PartId i) -> std::size_t;

    auto part_stats(const Hypergraph & g) -> std::vector<PartStats>;

    /// Largest average part degree, as a double (0 for an edgeless graph).
    /// Empty parts are skipped.
    auto max_avg_degree(const Hypergraph & g) -> double;

    auto min_part_size(const Hypergraph & g) -> std::size_t;

    /// Graphs only: the maximum, over ordered pairs of distinct parts (i, j),
    /// of the number of neighbours in V_j of a single vertex of V_i.
    auto local_degree(const Hypergraph & g) -> std::size_t;

    /// True iff t picks exactly one vertex of every part (each from the right
    /// part) and no edge of g lies inside the picked set.
    auto is_independent_transversal(const Hypergraph & g, const Transversal & t) -> bool;

    /// True iff every part has exactly k vertices.
    auto has_uniform_part_size(const Hypergraph & g, std::size_t k) -> bool;

    /// Result of restricting a hypergraph to a vertex subset and part subset.
    struct InducedSubgraph
    {
        Hypergraph graph;
        std::vector<VertexId> vertex_origin;   // new id -> id in the source
        std::vector<PartId> part_origin;       // new part -> part in the source
    };

    /// Keeps the vertices with keep_vertex[v] inside parts with keep_part[i],
    /// renumbering both densely in increasing order, and every edge all of
    /// whose vertices survive. An empty keep_part keeps every part.
    auto induced(const Hypergraph & g, const std::vector<bool> & keep_vertex,
            const std::vector<bool> & keep_part = {}) -> InducedSubgraph;

    /// Maps a transversal of an induced subgraph back to the source instance.
    auto lift(const InducedSubgraph & sub, const Transversal & t, std::size_t source_parts) -> Transversal;
}
