#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/kt_free.hpp>
#include <itlab/lll.hpp>
#include <itlab/random.hpp>

#include <algorithm>

namespace itlab
{
    auto local_search_colouring(const Hypergraph & g, std::size_t t, std::uint64_t seed) -> LocalSearchColouring
    {
        if (t == 0)
            throw Error("local_search_colouring: t must be positive");
        LocalSearchColouring c;
        Rng rng(seed);
        c.colour.resize(g.num_vertices());
        for (auto & x : c.colour)
            x = static_cast<std::uint32_t>(rng.uniform_index(t));

        std::vector<std::size_t> count(t);
        bool moved = true;
        while (moved) {
            moved = false;
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                std::fill(count.begin(), count.end(), 0);
                for (auto u : g.neighbours(v))
                    ++count[c.colour[u]];
                auto best = static_cast<std::uint32_t>(std::min_element(count.begin(), count.end()) - count.begin());
                if (count[c.colour[v]] > count[best]) {
                    c.colour[v] = best;
                    ++c.moves;
                    moved = true;
                }
            }
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            if (c.colour[ev[0]] == c.colour[ev[1]])
                ++c.monochromatic_edges;
        }
        return c;
    }

    auto monochromatic_subgraph(const Hypergraph & g, std::span<const std::uint32_t> colour) -> Hypergraph
    {
        std::vector<std::vector<VertexId>> edges;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            if (std::all_of(ev.begin(), ev.end(), [&](VertexId v) { return colour[v] == colour[ev[0]]; }))
                edges.emplace_back(ev.begin(), ev.end());
        }
        return Hypergraph{g.uniformity(), g.parts(), std::move(edges)};
    }

    namespace
    {
        auto adjacent(const Hypergraph & g, VertexId a, VertexId b) -> bool
        {
            auto nb = g.neighbours(a);
            return std::binary_search(nb.begin(), nb.end(), b);
        }

        auto extend(const Hypergraph & g, std::span<const VertexId> vertices, std::vector<VertexId> & clique,
                std::size_t from, std::size_t size) -> bool
        {
            if (clique.size() == size)
                return true;
            for (auto i = from; i < vertices.size(); ++i) {
                auto v = vertices[i];
                if (std::all_of(clique.begin(), clique.end(), [&](VertexId u) { return adjacent(g, u, v); })) {
                    clique.push_back(v);
                    if (extend(g, vertices, clique, i + 1, size))
                        return true;
                    clique.pop_back();
                }
            }
            return false;
        }
    }

    auto contains_clique(const Hypergraph & g, std::span<const VertexId> vertices, std::size_t size) -> bool
    {
        std::vector<VertexId> clique;
        return extend(g, vertices, clique, 0, size);
    }

    auto kt_free_transversal(const Hypergraph & g, std::size_t t, const KtFreeConfig & cfg) -> KtFreeResult
    {
        if (g.uniformity() != 2)
            throw Error("kt_free_transversal works on graphs only (r = 2)");
        if (t == 0)
            throw Error("kt_free_transversal: t must be positive");

        KtFreeResult result;
        result.colouring = local_search_colouring(g, t, derive_seed(cfg.seed, 0));
        auto mono = monochromatic_subgraph(g, result.colouring.colour);

        std::optional<Transversal> found;
        switch (cfg.solver) {
            case InnerSolver::nibble: {
                auto nc = cfg.nibble;
                nc.seed = derive_seed(cfg.seed, 1);
                auto r = nibble_solve(mono, nc);
                result.inner_steps = r.steps;
                result.inner_resamples = r.resamples;
                found = r.transversal;
                result.failure = r.failure;
                break;
            }
            case InnerSolver::lll: {
                auto rounds = cfg.lll_rounds ? *cfg.lll_rounds : default_lll_rounds(mono);
                auto r = lll_sample(mono, rounds, derive_seed(cfg.seed, 1));
                result.inner_resamples = r.resamples;
                if (r.success)
                    found = r.transversal;
                else
                    result.failure = "lll_sample exhausted " + std::to_string(rounds) + " rounds";
                break;
            }
            case InnerSolver::exact: {
                auto r = exact_find(mono, cfg.exact_budget);
                result.inner_steps = r.nodes;
                found = r.transversal;
                if (! found)
                    result.failure = std::string("exact_find: ") + std::string(to_string(r.status));
                break;
            }
        }

        if (found) {
            if (! is_independent_transversal(mono, *found))
                throw Error("kt_free_transversal: inner solver returned an invalid transversal");
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                auto ev = g.edge(e);
                bool inside = found->chosen()[g.part_of(ev[0])] == ev[0] && found->chosen()[g.part_of(ev[1])] == ev[1];
                if (inside && result.colouring.colour[ev[0]] == result.colouring.colour[ev[1]])
                    throw Error("kt_free_transversal: transversal induces a monochromatic edge");
            }
            result.transversal = std::move(found);
        }
        return result;
    }
}
