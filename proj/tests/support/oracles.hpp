#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// calls into the solvers; they only use the Hypergraph accessors.

#include <itlab/hypergraph.hpp>
#include <itlab/random.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace itlab::oracle
{
    /// Calls f(choice) for every transversal (one vertex per part) until f returns false.
    template <typename F>
    auto for_each_assignment(const Hypergraph & g, F && f) -> void
    {
        std::vector<std::size_t> idx(g.num_parts(), 0);
        std::vector<VertexId> choice(g.num_parts());
        for (std::size_t i = 0; i < g.num_parts(); ++i) {
            if (g.part(i).empty())
                return;
            choice[i] = g.part(i)[0];
        }
        while (true) {
            if (! f(choice))
                return;
            std::size_t i = 0;
            while (i < idx.size()) {
                if (++idx[i] < g.part(i).size()) {
                    choice[i] = g.part(i)[idx[i]];
                    break;
                }
                idx[i] = 0;
                choice[i] = g.part(i)[0];
                ++i;
            }
            if (i == idx.size())
                return;
        }
    }

    inline auto independent(const Hypergraph & g, const std::vector<VertexId> & choice) -> bool
    {
        std::set<VertexId> chosen(choice.begin(), choice.end());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            bool inside = true;
            for (auto v : g.edge(e))
                inside = inside && chosen.count(v) > 0;
            if (inside)
                return false;
        }
        return true;
    }

    inline auto has_it(const Hypergraph & g) -> bool
    {
        bool found = false;
        for_each_assignment(g, [&](const std::vector<VertexId> & c) {
            found = independent(g, c);
            return ! found;
        });
        return found;
    }

    inline auto count_its(const Hypergraph & g) -> std::uint64_t
    {
        std::uint64_t n = 0;
        for_each_assignment(g, [&](const std::vector<VertexId> & c) {
            n += independent(g, c) ? 1 : 0;
            return true;
        });
        return n;
    }

    /// Arbitrary multipartite r-graph with random part sizes and each
    /// cross-part r-set of vertices present with probability `density`.
    inline auto random_multipartite(std::size_t parts, std::size_t max_size, std::size_t r, double density,
            std::uint64_t seed) -> Hypergraph
    {
        Rng rng(seed);
        std::vector<std::vector<VertexId>> ps(parts);
        std::vector<PartId> part_of;
        VertexId next = 0;
        for (auto & p : ps) {
            auto size = 1 + rng.uniform_index(max_size);
            for (std::size_t j = 0; j < size; ++j) {
                p.push_back(next++);
                part_of.push_back(static_cast<PartId>(&p - ps.data()));
            }
        }
        std::vector<std::vector<VertexId>> edges;
        std::vector<VertexId> cur;
        auto rec = [&](auto && self, VertexId from) -> void {
            if (cur.size() == r) {
                if (rng.bernoulli(density))
                    edges.push_back(cur);
                return;
            }
            for (VertexId v = from; v < next; ++v) {
                bool clash = false;
                for (auto u : cur)
                    clash = clash || part_of[u] == part_of[v];
                if (clash)
                    continue;
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return Hypergraph(r, std::move(ps), std::move(edges));
    }

    /// Closed form E[#IT] = k^n (1 - s/k^r)^C(n,r) for random (n,k,r,s)-graphs.
    inline auto expected_transversals(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> double
    {
        double c = 1;
        for (std::size_t i = 0; i < r; ++i)
            c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
        return std::pow(static_cast<double>(k), static_cast<double>(n))
            * std::pow(1.0 - static_cast<double>(s) / std::pow(static_cast<double>(k), static_cast<double>(r)), c);
    }

    inline auto is_prime(std::uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }
}
