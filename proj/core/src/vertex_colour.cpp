#include <itlab/error.hpp>
#include <itlab/vertex_colour.hpp>

#include <algorithm>

namespace itlab
{
    auto build_vertex_colour_graph(const SimpleGraph & base,
            const std::vector<std::vector<std::uint32_t>> & lists) -> VertexColourGraph
    {
        if (lists.size() != base.num_vertices)
            throw Error("vertex-colour graph: " + std::to_string(lists.size()) + " lists for "
                + std::to_string(base.num_vertices) + " vertices");

        std::vector<std::vector<VertexId>> parts(base.num_vertices);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> labels;
        std::vector<std::vector<std::uint32_t>> sorted(base.num_vertices);
        for (std::uint32_t v = 0; v < base.num_vertices; ++v) {
            sorted[v] = lists[v];
            std::sort(sorted[v].begin(), sorted[v].end());
            if (sorted[v].empty())
                throw Error("vertex-colour graph: list of vertex " + std::to_string(v) + " is empty");
            if (std::adjacent_find(sorted[v].begin(), sorted[v].end()) != sorted[v].end())
                throw Error("vertex-colour graph: list of vertex " + std::to_string(v) + " repeats a colour");
            for (auto c : sorted[v]) {
                parts[v].push_back(static_cast<VertexId>(labels.size()));
                labels.emplace_back(v, c);
            }
        }

        std::vector<std::vector<VertexId>> edges;
        for (auto [a, b] : base.edges) {
            if (a >= base.num_vertices || b >= base.num_vertices || a == b)
                throw Error("vertex-colour graph: invalid base edge " + std::to_string(a) + "-" + std::to_string(b));
            for (std::size_t x = 0; x < sorted[a].size(); ++x)
                for (std::size_t y = 0; y < sorted[b].size(); ++y)
                    if (sorted[a][x] == sorted[b][y])
                        edges.push_back({parts[a][x], parts[b][y]});
        }
        return VertexColourGraph{Hypergraph{2, std::move(parts), std::move(edges)}, std::move(labels)};
    }

    auto colouring_of(const VertexColourGraph & vc, const Transversal & t) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> result(t.num_parts());
        for (PartId i = 0; i < t.num_parts(); ++i)
            if (auto v = t.at(i))
                result[i] = vc.labels[*v].second;
        return result;
    }

    auto count_list_colourings(const SimpleGraph & base, const std::vector<std::vector<std::uint32_t>> & lists)
        -> std::uint64_t
    {
        auto n = base.num_vertices;
        std::vector<std::size_t> index(n, 0);
        std::uint64_t count = 0;
        for (std::uint32_t v = 0; v < n; ++v)
            if (lists[v].empty())
                return 0;
        while (true) {
            bool proper = std::all_of(base.edges.begin(), base.edges.end(), [&](const auto & e) {
                return lists[e.first][index[e.first]] != lists[e.second][index[e.second]];
            });
            count += proper ? 1 : 0;
            std::size_t v = 0;
            while (v < n && ++index[v] == lists[v].size())
                index[v++] = 0;
            if (v == n)
                break;
        }
        return count;
    }
}
