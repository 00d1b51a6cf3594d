#include <itlab/error.hpp>
#include <itlab/hypergraph.hpp>

#include <oracles.hpp>

#include <doctest.h>

using namespace itlab;

namespace
{
    auto triangle() -> Hypergraph
    {
        return Hypergraph(2, {{0, 1}, {2, 3}, {4, 5}}, {{0, 2}, {2, 4}, {0, 4}, {1, 3}});
    }
}

TEST_SUITE("hypergraph")
{
    TEST_CASE("accessors")
    {
        auto g = triangle();
        CHECK(g.uniformity() == 2);
        CHECK(g.num_parts() == 3);
        CHECK(g.num_vertices() == 6);
        CHECK(g.num_edges() == 4);
        CHECK(g.part_of(3) == 1);
        CHECK(g.degree(0) == 2);
        CHECK(g.degree(5) == 0);
        CHECK(g.max_degree() == 2);
        CHECK(min_part_size(g) == 2);
        CHECK(avg_degree_of_part(g, 0) == Rational(3, 2));
        CHECK(max_avg_degree(g) == doctest::Approx(1.5));
        CHECK(local_degree(g) == 1);
    }

    TEST_CASE("invalid input is rejected")
    {
        CHECK_THROWS_AS(Hypergraph(2, {{0, 1}, {1, 2}}, {}), Error);
        CHECK_THROWS_AS(Hypergraph(2, {{0}, {1}}, {{0, 0}}), Error);
        CHECK_THROWS_AS(Hypergraph(2, {{0, 1}, {2}}, {{0, 1}}), Error);
        CHECK_THROWS_AS(Hypergraph(2, {{0}, {1}}, {{0, 1}, {1, 0}}), Error);
        CHECK_THROWS_AS(Hypergraph(3, {{0}, {1}, {2}}, {{0, 1}}), Error);
        CHECK_THROWS_AS(Hypergraph(2, {{0}, {1}}, {{0, 7}}), Error);
    }

    TEST_CASE("is_independent_transversal")
    {
        auto g = triangle();
        Transversal t(3);
        t.assign(0, 0);
        t.assign(1, 3);
        CHECK(! is_independent_transversal(g, t));   // incomplete
        t.assign(2, 5);
        CHECK(is_independent_transversal(g, t));
        t.assign(2, 4);
        CHECK(! is_independent_transversal(g, t));
        t.assign(1, 2);
        t.assign(2, 5);
        CHECK(! is_independent_transversal(g, t));
        t.assign(1, 4);
        CHECK(! is_independent_transversal(g, t));   // 4 is not in part 1
    }

    TEST_CASE("independence agrees with the brute-force check")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            auto r = 2 + seed % 2;
            auto g = oracle::random_multipartite(4, 3, r, 0.3, seed);
            oracle::for_each_assignment(g, [&](const std::vector<VertexId> & c) {
                Transversal t(g.num_parts());
                for (PartId i = 0; i < c.size(); ++i)
                    t.assign(i, c[i]);
                REQUIRE(is_independent_transversal(g, t) == oracle::independent(g, c));
                return true;
            });
        }
    }

    TEST_CASE("induced subgraph and lift")
    {
        auto g = triangle();
        std::vector<bool> keep{true, false, true, true, false, true};
        auto sub = induced(g, keep);
        CHECK(sub.graph.num_vertices() == 4);
        CHECK(sub.graph.num_parts() == 3);
        CHECK(sub.graph.num_edges() == 1);   // only {0,2} survives
        for (VertexId v = 0; v < sub.graph.num_vertices(); ++v)
            CHECK(keep[sub.vertex_origin[v]]);

        Transversal t(3);
        t.assign(0, 0);    // origin 0
        t.assign(1, 2);    // origin 3
        t.assign(2, 3);    // origin 5
        auto lifted = lift(sub, t, 3);
        CHECK(lifted.at(0) == 0u);
        CHECK(lifted.at(1) == 3u);
        CHECK(lifted.at(2) == 5u);
        CHECK(is_independent_transversal(g, lifted));
    }

    TEST_CASE("part stats use exact rationals")
    {
        Hypergraph g(2, {{0, 1, 2}, {3}}, {{0, 3}, {1, 3}});
        auto stats = part_stats(g);
        CHECK(stats[0].avg_degree == Rational(2, 3));
        CHECK(stats[1].avg_degree == Rational(2));
        CHECK(stats[0].max_degree == 1);
        CHECK(degree_sum_of_part(g, 1) == 2);
        CHECK(has_uniform_part_size(Hypergraph::edgeless(2, {{0, 1}, {2, 3}}), 2));
        CHECK(! has_uniform_part_size(g, 3));
    }
}
