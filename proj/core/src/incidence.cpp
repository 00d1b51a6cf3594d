#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/incidence.hpp>
#include <itlab/random.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace itlab
{
    auto neighbourhood_incidence_graph(const BipartiteHost & h, std::size_t r) -> Hypergraph
    {
        if (r < 2)
            throw Error("incidence graph: r must be at least 2");
        if (r > h.n())
            throw Error("incidence graph: too few parts (r=" + std::to_string(r) + " > |A|=" + std::to_string(h.n()) + ")");

        std::vector<std::vector<VertexId>> parts(h.n());
        // by_b[b] lists (a, vertex id of (a, b)) with a increasing.
        std::vector<std::vector<std::pair<std::uint32_t, VertexId>>> by_b(h.m());
        VertexId next = 0;
        for (std::size_t a = 0; a < h.n(); ++a) {
            if (h.degree(a) == 0)
                throw Error("incidence graph: A-vertex " + std::to_string(a) + " has no neighbours");
            for (auto b : h.neighbours(a)) {
                parts[a].push_back(next);
                by_b[b].emplace_back(static_cast<std::uint32_t>(a), next);
                ++next;
            }
        }

        std::vector<std::vector<VertexId>> edges;
        std::vector<std::size_t> idx(r);
        for (auto & holders : by_b) {
            if (holders.size() < r)
                continue;
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            while (true) {
                auto & e = edges.emplace_back();
                for (auto i : idx)
                    e.push_back(holders[i].second);
                std::size_t i = r;
                while (i-- > 0 && idx[i] == holders.size() - r + i)
                    ;
                if (i == static_cast<std::size_t>(-1))
                    break;
                ++idx[i];
                for (auto j = i + 1; j < r; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
        return Hypergraph{r, std::move(parts), std::move(edges)};
    }

    auto verify_no_transversal_by_pigeonhole(const BipartiteHost & h, std::size_t r) -> bool
    {
        if (r < 1)
            return false;
        return h.m() * (r - 1) < h.n();
    }

    auto pad_to_nkrs(const Hypergraph & g, std::size_t k, std::size_t s, std::uint64_t seed) -> Hypergraph
    {
        auto r = g.uniformity();
        if (s > k)
            throw Error("pad: a matching of size s=" + std::to_string(s) + " is not completable in parts of size k=" + std::to_string(k));
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (g.part(i).size() < k)
                throw Error("pad: part " + std::to_string(i) + " has " + std::to_string(g.part(i).size()) + " < k=" + std::to_string(k) + " vertices");
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            std::vector<PartId> ps;
            for (auto v : g.edge(e))
                ps.push_back(g.part_of(v));
            std::sort(ps.begin(), ps.end());
            if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
                throw Error("pad: edge " + std::to_string(e) + " meets a part twice");
        }
        {
            auto census = matching_census(g);
            if (census.partial)
                throw Error("pad: too many r-sets of parts for an exhaustive census");
            if (census.max_edges > s || ! census.all_matchings)
                throw Error("pad: some r-set of parts already carries more than s edges or a non-matching");
        }

        // Deletion, largest current degree first.
        std::vector<bool> alive_vertex(g.num_vertices(), true);
        std::vector<bool> alive_edge(g.num_edges(), true);
        std::vector<std::size_t> degree(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            degree[v] = g.degree(v);
        for (PartId i = 0; i < g.num_parts(); ++i) {
            auto remaining = g.part(i).size();
            while (remaining > k) {
                VertexId victim = no_vertex;
                for (auto v : g.part(i))
                    if (alive_vertex[v] && (victim == no_vertex || degree[v] > degree[victim]))
                        victim = v;
                alive_vertex[victim] = false;
                --remaining;
                for (auto e : g.incident_edges(victim))
                    if (alive_edge[e]) {
                        alive_edge[e] = false;
                        for (auto u : g.edge(e))
                            --degree[u];
                    }
            }
        }
        auto trimmed = induced(g, alive_vertex).graph;

        // Vertices already covered inside each r-set of parts.
        std::map<std::vector<PartId>, std::vector<VertexId>> covered;
        for (EdgeId e = 0; e < trimmed.num_edges(); ++e) {
            std::vector<PartId> key;
            for (auto v : trimmed.edge(e))
                key.push_back(trimmed.part_of(v));
            std::sort(key.begin(), key.end());
            auto & list = covered[key];
            for (auto v : trimmed.edge(e))
                list.push_back(v);
        }

        auto edges = trimmed.edge_list();
        auto m = trimmed.num_parts();
        if (m >= r && s > 0) {
            Rng rng(seed);
            std::vector<PartId> combo(r);
            std::iota(combo.begin(), combo.end(), PartId{0});
            std::vector<std::vector<VertexId>> free(r);
            while (true) {
                std::size_t existing = 0;
                const std::vector<VertexId> * used = nullptr;
                if (auto it = covered.find(combo); it != covered.end()) {
                    used = &it->second;
                    existing = it->second.size() / r;
                }
                auto needed = s - existing;
                if (needed > 0) {
                    for (std::size_t j = 0; j < r; ++j) {
                        free[j].clear();
                        for (auto v : trimmed.part(combo[j]))
                            if (! used || std::find(used->begin(), used->end(), v) == used->end())
                                free[j].push_back(v);
                        rng.shuffle_prefix(std::span<VertexId>(free[j]), needed);
                    }
                    for (std::size_t t = 0; t < needed; ++t) {
                        auto & e = edges.emplace_back();
                        for (std::size_t j = 0; j < r; ++j)
                            e.push_back(free[j][t]);
                    }
                }

                std::size_t i = r;
                while (i-- > 0 && combo[i] == m - r + i)
                    ;
                if (i == static_cast<std::size_t>(-1))
                    break;
                ++combo[i];
                for (auto j = i + 1; j < r; ++j)
                    combo[j] = combo[j - 1] + 1;
            }
        }
        return Hypergraph{r, trimmed.parts(), std::move(edges)};
    }
}
