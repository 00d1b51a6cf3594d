#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/host.hpp>
#include <itlab/incidence.hpp>
#include <itlab/norm_graph.hpp>
#include <itlab/primes.hpp>
#include <itlab/projective.hpp>
#include <itlab/random_nkrs.hpp>
#include <itlab/upper_bound.hpp>

#include <oracles.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace itlab;

TEST_SUITE("constructions")
{
    TEST_CASE("is_prime matches trial division")
    {
        for (std::uint64_t n = 0; n < 5000; ++n)
            REQUIRE(is_prime(n) == oracle::is_prime(n));
        CHECK(is_prime(18446744073709551557ULL));
        CHECK(! is_prime(18446744073709551555ULL));
        CHECK(is_prime(2305843009213693951ULL));
    }

    TEST_CASE("find_prime_in_ap returns the smallest prime in the progression")
    {
        for (std::uint64_t q = 1; q <= 12; ++q)
            for (std::uint64_t a = 0; a < q; ++a) {
                if (std::gcd(a, q) != 1)
                    continue;
                for (std::uint64_t x = 2; x < 200; x += 7) {
                    auto p = find_prime_in_ap(x, a, q);
                    REQUIRE(p >= x);
                    REQUIRE(p % q == a % q);
                    REQUIRE(oracle::is_prime(p));
                    for (auto y = x; y < p; ++y)
                        REQUIRE(! (y % q == a % q && oracle::is_prime(y)));
                }
            }
        CHECK_THROWS_AS(find_prime_in_ap(10, 2, 4), Error);
        CHECK_THROWS_AS(find_prime_in_ap(10, 1, 0), Error);
    }

    TEST_CASE("projective plane incidence")
    {
        for (std::uint32_t q : {2u, 3u, 5u}) {
            auto h = projective_plane_incidence(q);
            std::size_t size = q * q + q + 1;
            CHECK(h.n() == size);
            CHECK(h.m() == size);
            std::vector<std::size_t> line_degree(h.m(), 0);
            for (std::size_t a = 0; a < h.n(); ++a) {
                CHECK(h.degree(a) == q + 1);
                for (auto b : h.neighbours(a))
                    line_degree[b] += 1;
            }
            CHECK(std::all_of(line_degree.begin(), line_degree.end(), [&](auto d) { return d == q + 1; }));
            for (std::size_t a = 0; a < h.n(); ++a)
                for (std::size_t b = a + 1; b < h.n(); ++b) {
                    std::vector<std::uint32_t> common;
                    std::set_intersection(h.neighbours(a).begin(), h.neighbours(a).end(), h.neighbours(b).begin(),
                            h.neighbours(b).end(), std::back_inserter(common));
                    REQUIRE(common.size() == 1);
                }
        }
        CHECK_THROWS_AS(projective_plane_incidence(4), Error);
    }

    TEST_CASE("projective host certificate")
    {
        auto c = projective_plane_host(3);
        CHECK(c.host.n() == 13);
        CHECK(c.host.m() == 12);
        CHECK(c.certificate.min_degree_a == 3);
        CHECK(c.certificate.max_common_neighbours == 1);
        CHECK(c.certificate == certify(c.host, 2));
        CHECK(verify_no_transversal_by_pigeonhole(c.host, 2));
    }

    TEST_CASE("quadratic field arithmetic")
    {
        for (std::uint32_t q : {3u, 5u, 7u}) {
            QuadraticField f(q);
            CHECK(f.size() == q * q);
            for (std::uint32_t a = 1; a < f.size(); ++a) {
                bool has_inverse = false;
                for (std::uint32_t b = 1; b < f.size() && ! has_inverse; ++b)
                    has_inverse = f.mul(a, b) == 1;
                REQUIRE(has_inverse);
                REQUIRE(f.norm(a) < q);
                REQUIRE(f.norm(a) != 0);
                REQUIRE(f.pow(a, q * q - 1) == 1);
                for (std::uint32_t b = 0; b < f.size(); b += 3) {
                    REQUIRE(f.mul(a, b) == f.mul(b, a));
                    REQUIRE(f.norm(f.mul(a, b)) == (f.norm(a) * f.norm(b)) % q);
                }
            }
        }
    }

    TEST_CASE("norm graph order, regularity and K_{3,3}-freeness")
    {
        for (std::uint32_t q : {3u, 5u}) {
            auto g = build_norm_graph(q);
            CHECK(g.order() == q * q * (q - 1));
            for (std::size_t v = 0; v < g.order(); ++v)
                REQUIRE(g.relation_degree(v) == q * q - 1);
            for (std::size_t v = 0; v < g.order(); ++v)
                for (auto u : g.adjacency[v])
                    REQUIRE(std::binary_search(g.adjacency[u].begin(), g.adjacency[u].end(), v));
        }
        CHECK(common_neighbour_census(build_norm_graph(3).relation_host(), 3).max_common <= 2);
        CHECK_THROWS_AS(build_norm_graph(4), Error);
    }

    TEST_CASE("norm graph host satisfies its contract")
    {
        auto h = norm_graph_host(5, default_norm_degree_floor(5), 1);
        CHECK(default_norm_degree_floor(5) == 4);
        CHECK(h.host.n() > 2 * h.host.m());
        CHECK(h.certificate.min_degree_a >= 4);
        CHECK(h.certificate.max_common_neighbours <= 2);
        CHECK(h.certificate == certify(h.host, 3));
        CHECK(verify_no_transversal_by_pigeonhole(h.host, 3));
    }

    TEST_CASE("random_nkrs is an (n,k,r,s)-graph")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            std::size_t r = 2 + seed % 2;
            std::size_t k = 2 + seed % 4;
            std::size_t s = seed % (k + 1);
            auto g = random_nkrs(6, k, r, s, seed);
            auto check = check_nkrs(g, k, s);
            INFO(check.reason);
            REQUIRE(check.ok);
            CHECK(g.num_edges() == s * static_cast<std::size_t>(binomial(6, r)));
        }
        CHECK_THROWS_AS(random_nkrs(3, 2, 2, 3, 0), Error);
        CHECK_THROWS_AS(random_nkrs(2, 2, 3, 1, 0), Error);
    }

    TEST_CASE("random_nkrs edge position is uniform")
    {
        // For s = 1, each of the k^2 vertex pairs of two parts is equally likely.
        std::vector<int> hits(9, 0);
        for (std::uint64_t seed = 0; seed < 9000; ++seed) {
            auto g = random_nkrs(2, 3, 2, 1, seed);
            auto e = g.edge(0);
            hits[e[0] * 3 + (e[1] - 3)] += 1;
        }
        for (auto h : hits)
            CHECK(h / 9000.0 == doctest::Approx(1.0 / 9).epsilon(0.1));
    }

    TEST_CASE("neighbourhood incidence graph")
    {
        BipartiteHost h(3, {{0, 1}, {1, 2}, {0, 2}});
        auto g = neighbourhood_incidence_graph(h, 2);
        CHECK(g.num_parts() == 3);
        CHECK(g.num_vertices() == 6);
        // Each pair of A-vertices shares one B-vertex: one edge per pair.
        CHECK(g.num_edges() == 3);
        CHECK(! oracle::has_it(g) == verify_no_transversal_by_pigeonhole(h, 2));
        CHECK_THROWS_AS(neighbourhood_incidence_graph(BipartiteHost(2, {{0}, {}}), 2), Error);
    }

    TEST_CASE("pigeonhole certificate agrees with the brute-force IT check")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto h = random_host(4 + seed % 3, 3 + seed % 3, 0.6, seed);
            if (h.min_degree() == 0)
                continue;
            auto g = neighbourhood_incidence_graph(h, 2);
            if (verify_no_transversal_by_pigeonhole(h, 2))
                CHECK(! oracle::has_it(g));
        }
    }

    TEST_CASE("pad_to_nkrs reaches exactly s per r-set")
    {
        auto host = projective_plane_host(2);
        auto g = neighbourhood_incidence_graph(host.host, 2);
        // Parts have 2 or 3 vertices; padding trims them to k = 2.
        auto padded = pad_to_nkrs(g, 2, 1, 5);
        CHECK(check_nkrs(padded, 2, 1).ok);
        CHECK(padded.num_edges() == 21);
        CHECK(! oracle::has_it(padded));
        CHECK_THROWS_AS(pad_to_nkrs(g, 3, 1, 0), Error);
        CHECK_THROWS_AS(pad_to_nkrs(g, 2, 3, 0), Error);

        auto free = random_nkrs(5, 6, 2, 1, 2);
        auto fuller = pad_to_nkrs(free, 4, 3, 1);
        CHECK(check_nkrs(fuller, 4, 3).ok);
    }

    TEST_CASE("upper-bound instances have no IT")
    {
        auto k2 = assemble_upper_bound_instance(2, 2, 1, 0);
        CHECK(k2.graph.num_parts() == 7);
        CHECK(check_nkrs(k2.graph, 2, 1).ok);
        CHECK(! oracle::has_it(k2.graph));
        CHECK(k2.provenance.host_type == "projective-plane");
        CHECK(k2.provenance.q == 2u);

        auto k3 = assemble_upper_bound_instance(3, 2, 1, 0);
        CHECK(k3.graph.num_parts() == 13);
        CHECK(check_nkrs(k3.graph, 3, 1).ok);
        CHECK(exact_find(k3.graph).status == ExactStatus::none);

        // k = 4 uses q = 5.
        auto k4 = assemble_upper_bound_instance(4, 2, 1, 0);
        CHECK(k4.graph.num_parts() == 31);
        CHECK(check_nkrs(k4.graph, 4, 1).ok);

        auto n3 = assemble_upper_bound_instance(2, 3, 2, 0);
        CHECK(n3.provenance.host_type == "norm-graph");
        CHECK(check_nkrs(n3.graph, 2, 2).ok);
        CHECK(n3.provenance.pigeonhole);

        CHECK_THROWS_AS(assemble_upper_bound_instance(3, 4, 1, 0), ConstructionError);
    }

    TEST_CASE("random bipartite host domain checks")
    {
        CHECK(random_host_constant(2, 0.5) == doctest::Approx(320));
        CHECK_THROWS_AS(random_bipartite_host(200, 200, 2, 10, 0.5, 0), ConstructionError);
        // With C overridden the desk-scale instance is in range.
        auto h = random_bipartite_host(30, 200, 2, 60, 0.5, 3, 20, 1.0);
        CHECK(h.certificate.max_common_neighbours <= 60);
        CHECK(static_cast<double>(h.certificate.min_degree_a) >= h.degree_floor);
        CHECK(h.certificate == certify(h.host, 2));
    }
}
