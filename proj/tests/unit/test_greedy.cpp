#include <itlab/greedy.hpp>
#include <itlab/random_nkrs.hpp>

#include <oracles.hpp>

#include <doctest.h>

using namespace itlab;

TEST_SUITE("greedy")
{
    TEST_CASE("any returned transversal is independent and failures name a part")
    {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            auto g = oracle::random_multipartite(5, 3, 2 + seed % 2, 0.3, seed);
            auto res = greedy_find(g);
            if (res.transversal) {
                REQUIRE(is_independent_transversal(g, *res.transversal));
                REQUIRE(oracle::has_it(g));
            }
            else {
                REQUIRE(res.stuck_part);
                REQUIRE(*res.stuck_part < g.num_parts());
            }
        }
    }

    TEST_CASE("sparse instances succeed")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto g = random_nkrs(30, 12, 2, 1, seed);
            auto res = greedy_find(g);
            REQUIRE(res.transversal);
            CHECK(is_independent_transversal(g, *res.transversal));
        }
    }

    TEST_CASE("deterministic")
    {
        auto g = random_nkrs(20, 4, 2, 1, 5);
        auto a = greedy_find(g);
        auto b = greedy_find(g);
        REQUIRE(a.transversal.has_value() == b.transversal.has_value());
        if (a.transversal)
            CHECK(a.transversal->vertices() == b.transversal->vertices());
    }
}
