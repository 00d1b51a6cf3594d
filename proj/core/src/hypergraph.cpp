#include <itlab/error.hpp>
#include <itlab/hypergraph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace itlab
{
    Hypergraph::Hypergraph(std::size_t uniformity, std::vector<std::vector<VertexId>> parts,
            std::vector<std::vector<VertexId>> edges) :
        _uniformity(uniformity),
        _parts(std::move(parts))
    {
        if (_uniformity < 2)
            throw Error("uniformity must be at least 2");

        std::size_t n = 0;
        for (auto & p : _parts) {
            std::sort(p.begin(), p.end());
            n += p.size();
        }

        constexpr PartId unassigned = std::numeric_limits<PartId>::max();
        _part_of.assign(n, unassigned);
        for (PartId i = 0; i < _parts.size(); ++i)
            for (auto v : _parts[i]) {
                if (v >= n)
                    throw Error("vertex " + std::to_string(v) + " out of range (ids must be 0.." + std::to_string(n) + "-1)");
                if (_part_of[v] != unassigned)
                    throw Error("vertex " + std::to_string(v) + " appears in more than one part");
                _part_of[v] = i;
            }

        for (auto & e : edges) {
            if (e.size() != _uniformity)
                throw Error("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(_uniformity) + "-uniform hypergraph");
            std::sort(e.begin(), e.end());
            if (e.back() >= n)
                throw Error("edge vertex " + std::to_string(e.back()) + " out of range");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw Error("edge repeats a vertex");
            auto first_part = _part_of[e.front()];
            if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return _part_of[v] == first_part; }))
                throw Error("edge lies inside part " + std::to_string(first_part));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw Error("duplicate edge");

        _num_edges = edges.size();
        _edge_vertices.reserve(_num_edges * _uniformity);
        for (auto & e : edges)
            _edge_vertices.insert(_edge_vertices.end(), e.begin(), e.end());
        edges.clear();
        edges.shrink_to_fit();

        _incidence_offsets.assign(n + 1, 0);
        for (auto v : _edge_vertices)
            ++_incidence_offsets[v + 1];
        std::partial_sum(_incidence_offsets.begin(), _incidence_offsets.end(), _incidence_offsets.begin());
        _incidence.resize(_edge_vertices.size());
        {
            auto cursor = _incidence_offsets;
            for (EdgeId e = 0; e < _num_edges; ++e)
                for (auto v : edge(e))
                    _incidence[cursor[v]++] = e;
        }

        _neighbour_offsets.assign(n + 1, 0);
        if (_uniformity == 2) {
            _neighbour_offsets = _incidence_offsets;
            _neighbours.resize(_incidence.size());
            for (VertexId v = 0; v < n; ++v) {
                auto out = _neighbours.begin() + _neighbour_offsets[v];
                for (auto e : incident_edges(v)) {
                    auto ev = edge(e);
                    *out++ = ev[0] == v ? ev[1] : ev[0];
                }
                std::sort(_neighbours.begin() + _neighbour_offsets[v], out);
            }
        }
        else {
            std::vector<VertexId> scratch;
            for (VertexId v = 0; v < n; ++v) {
                scratch.clear();
                for (auto e : incident_edges(v))
                    for (auto u : edge(e))
                        if (u != v)
                            scratch.push_back(u);
                std::sort(scratch.begin(), scratch.end());
                scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
                _neighbours.insert(_neighbours.end(), scratch.begin(), scratch.end());
                _neighbour_offsets[v + 1] = _neighbours.size();
            }
        }
    }

    auto Hypergraph::edgeless(std::size_t uniformity, std::vector<std::vector<VertexId>> parts) -> Hypergraph
    {
        return Hypergraph{uniformity, std::move(parts), {}};
    }

    auto Hypergraph::max_degree() const -> std::size_t
    {
        std::size_t best = 0;
        for (VertexId v = 0; v < num_vertices(); ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto Hypergraph::edge_list() const -> std::vector<std::vector<VertexId>>
    {
        std::vector<std::vector<VertexId>> result;
        result.reserve(_num_edges);
        for (EdgeId e = 0; e < _num_edges; ++e) {
            auto ev = edge(e);
            result.emplace_back(ev.begin(), ev.end());
        }
        return result;
    }

    auto Transversal::assigned_count() const -> std::size_t
    {
        return static_cast<std::size_t>(std::count_if(_chosen.begin(), _chosen.end(), [](VertexId v) { return v != no_vertex; }));
    }

    auto Transversal::vertices() const -> std::vector<VertexId>
    {
        std::vector<VertexId> result;
        for (auto v : _chosen)
            if (v != no_vertex)
                result.push_back(v);
        return result;
    }

    auto degree_sum_of_part(const Hypergraph & g, PartId i) -> std::size_t
    {
        std::size_t sum = 0;
        for (auto v : g.part(i))
            sum += g.degree(v);
        return sum;
    }

    auto avg_degree_of_part(const Hypergraph & g, PartId i) -> Rational
    {
        if (i >= g.num_parts())
            throw Error("part index " + std::to_string(i) + " out of range");
        auto size = g.part(i).size();
        if (size == 0)
            throw Error("degenerate part " + std::to_string(i) + ": average degree of an empty part");
        return Rational{static_cast<std::int64_t>(degree_sum_of_part(g, i)), static_cast<std::int64_t>(size)};
    }

    auto part_stats(const Hypergraph & g) -> std::vector<PartStats>
    {
        std::vector<PartStats> result;
        result.reserve(g.num_parts());
        for (PartId i = 0; i < g.num_parts(); ++i) {
            PartStats s;
            s.part_index = i;
            s.size = g.part(i).size();
            for (auto v : g.part(i))
                s.max_degree = std::max(s.max_degree, g.degree(v));
            if (s.size > 0)
                s.avg_degree = avg_degree_of_part(g, i);
            result.push_back(s);
        }
        return result;
    }

    auto max_avg_degree(const Hypergraph & g) -> double
    {
        double best = 0.0;
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (! g.part(i).empty())
                best = std::max(best, static_cast<double>(degree_sum_of_part(g, i)) / static_cast<double>(g.part(i).size()));
        return best;
    }

    auto min_part_size(const Hypergraph & g) -> std::size_t
    {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (auto & p : g.parts())
            best = std::min(best, p.size());
        return g.num_parts() == 0 ? 0 : best;
    }

    auto local_degree(const Hypergraph & g) -> std::size_t
    {
        if (g.uniformity() != 2)
            throw Error("local degree is defined for graphs only (r = 2); use the matching census for r > 2");

        std::size_t best = 0;
        std::vector<PartId> scratch;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            scratch.clear();
            for (auto u : g.neighbours(v))
                scratch.push_back(g.part_of(u));
            std::sort(scratch.begin(), scratch.end());
            for (std::size_t i = 0; i < scratch.size();) {
                std::size_t j = i;
                while (j < scratch.size() && scratch[j] == scratch[i])
                    ++j;
                best = std::max(best, j - i);
                i = j;
            }
        }
        return best;
    }

    auto is_independent_transversal(const Hypergraph & g, const Transversal & t) -> bool
    {
        if (t.num_parts() != g.num_parts())
            return false;
        std::vector<bool> picked(g.num_vertices(), false);
        for (PartId i = 0; i < g.num_parts(); ++i) {
            auto v = t.chosen()[i];
            if (v == no_vertex || v >= g.num_vertices() || g.part_of(v) != i)
                return false;
            picked[v] = true;
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            if (std::all_of(ev.begin(), ev.end(), [&](VertexId v) { return picked[v]; }))
                return false;
        }
        return true;
    }

    auto has_uniform_part_size(const Hypergraph & g, std::size_t k) -> bool
    {
        return std::all_of(g.parts().begin(), g.parts().end(), [&](const auto & p) { return p.size() == k; });
    }

    auto induced(const Hypergraph & g, const std::vector<bool> & keep_vertex, const std::vector<bool> & keep_part) -> InducedSubgraph
    {
        if (keep_vertex.size() != g.num_vertices())
            throw Error("induced: vertex mask has the wrong size");
        if (! keep_part.empty() && keep_part.size() != g.num_parts())
            throw Error("induced: part mask has the wrong size");

        std::vector<PartId> part_origin;
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (keep_part.empty() || keep_part[i])
                part_origin.push_back(i);

        std::vector<VertexId> new_id(g.num_vertices(), no_vertex);
        std::vector<VertexId> vertex_origin;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (keep_vertex[v] && (keep_part.empty() || keep_part[g.part_of(v)])) {
                new_id[v] = static_cast<VertexId>(vertex_origin.size());
                vertex_origin.push_back(v);
            }

        std::vector<std::vector<VertexId>> parts;
        parts.reserve(part_origin.size());
        for (auto i : part_origin) {
            auto & p = parts.emplace_back();
            for (auto v : g.part(i))
                if (new_id[v] != no_vertex)
                    p.push_back(new_id[v]);
        }

        std::vector<std::vector<VertexId>> edges;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            if (std::all_of(ev.begin(), ev.end(), [&](VertexId v) { return new_id[v] != no_vertex; })) {
                auto & out = edges.emplace_back();
                for (auto v : ev)
                    out.push_back(new_id[v]);
            }
        }

        return InducedSubgraph{Hypergraph{g.uniformity(), std::move(parts), std::move(edges)},
            std::move(vertex_origin), std::move(part_origin)};
    }

    auto lift(const InducedSubgraph & sub, const Transversal & t, std::size_t source_parts) -> Transversal
    {
        Transversal result(source_parts);
        for (PartId i = 0; i < t.num_parts(); ++i)
            if (auto v = t.at(i))
                result.assign(sub.part_origin[i], sub.vertex_origin[*v]);
        return result;
    }
}
