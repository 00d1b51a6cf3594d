#include <itlab/error.hpp>
#include <itlab/kt_free.hpp>
#include <itlab/random_nkrs.hpp>

#include <doctest.h>

#include <algorithm>

using namespace itlab;

namespace
{
    // Brute-force clique test on the chosen vertices.
    auto has_clique(const Hypergraph & g, const std::vector<VertexId> & vs, std::size_t size) -> bool
    {
        auto adjacent = [&](VertexId a, VertexId b) {
            auto nb = g.neighbours(a);
            return std::find(nb.begin(), nb.end(), b) != nb.end();
        };
        std::vector<bool> pick(vs.size(), false);
        if (size > vs.size())
            return false;
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            bool clique = true;
            for (std::size_t i = 0; i < vs.size() && clique; ++i)
                for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                    if (pick[i] && pick[j])
                        clique = adjacent(vs[i], vs[j]);
            if (clique)
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }
}

TEST_SUITE("kt_free")
{
    TEST_CASE("local search bound d'(v) <= d(v)/t")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            std::size_t t = 2 + seed % 3;
            auto g = random_nkrs(25, 4, 2, 2, seed);
            auto c = local_search_colouring(g, t, seed);
            auto mono = monochromatic_subgraph(g, c.colour);
            CHECK(mono.num_edges() == c.monochromatic_edges);
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                REQUIRE(c.colour[v] < t);
                REQUIRE(mono.degree(v) * t <= g.degree(v));
            }
        }
    }

    TEST_CASE("contains_clique agrees with brute force")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto g = random_nkrs(7, 2, 2, 2, seed);
            std::vector<VertexId> vs;
            for (PartId i = 0; i < g.num_parts(); ++i)
                vs.push_back(g.part(i)[seed % 2]);
            for (std::size_t size = 2; size <= 4; ++size)
                REQUIRE(contains_clique(g, vs, size) == has_clique(g, vs, size));
        }
    }

    TEST_CASE("returned transversals induce no K_{t+1}")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::size_t t = 2 + seed % 2;
            auto g = random_nkrs(30, 6, 2, 2, seed);
            KtFreeConfig cfg;
            cfg.solver = InnerSolver::exact;
            cfg.seed = seed;
            auto res = kt_free_transversal(g, t, cfg);
            REQUIRE(res.transversal);
            CHECK(res.transversal->is_complete());
            CHECK(! has_clique(g, res.transversal->vertices(), t + 1));
        }
    }

    TEST_CASE("t = 1 is the ordinary problem")
    {
        auto g = random_nkrs(20, 8, 2, 1, 1);
        KtFreeConfig cfg;
        cfg.solver = InnerSolver::exact;
        auto res = kt_free_transversal(g, 1, cfg);
        REQUIRE(res.transversal);
        CHECK(is_independent_transversal(g, *res.transversal));
        CHECK_THROWS_AS(kt_free_transversal(g, 0, cfg), Error);
    }
}
