#include <itlab/greedy.hpp>

#include <algorithm>
#include <numeric>

namespace itlab
{
    auto greedy_find(const Hypergraph & g) -> GreedyResult
    {
        std::vector<PartId> order(g.num_parts());
        std::iota(order.begin(), order.end(), PartId{0});
        std::stable_sort(order.begin(), order.end(),
                [&](PartId a, PartId b) { return g.part(a).size() < g.part(b).size(); });

        auto r = g.uniformity();
        std::vector<std::uint32_t> edge_count(g.num_edges(), 0);
        std::vector<bool> chosen(g.num_vertices(), false);
        std::vector<bool> blocked(g.num_vertices(), false);
        Transversal t(g.num_parts());

        for (auto i : order) {
            auto best = no_vertex;
            for (auto v : g.part(i))
                if (! blocked[v] && (best == no_vertex || g.degree(v) < g.degree(best)))
                    best = v;
            if (best == no_vertex)
                return GreedyResult{std::nullopt, i};

            t.assign(i, best);
            chosen[best] = true;
            for (auto e : g.incident_edges(best))
                if (++edge_count[e] == r - 1)
                    for (auto u : g.edge(e))
                        if (! chosen[u])
                            blocked[u] = true;
        }
        return GreedyResult{std::move(t), std::nullopt};
    }
}
