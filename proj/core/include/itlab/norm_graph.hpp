#pragma once

#include <itlab/host.hpp>
#include <itlab/projective.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace itlab
{
    /// The field F_{q^2} as F_q[x]/(x^2 + c1 x + c0), where x^2 + c1 x + c0 is
    /// the first irreducible monic quadratic in lexicographic order of
    /// (c1, c0). Elements are indices a0 + q a1 standing for a0 + a1 x.
    class QuadraticField
    {
    public:
        explicit QuadraticField(std::uint32_t q);

        auto q() const -> std::uint32_t { return _q; }
        auto size() const -> std::uint32_t { return _q * _q; }
        auto modulus() const -> std::pair<std::uint32_t, std::uint32_t> { return {_c1, _c0}; }

        auto add(std::uint32_t a, std::uint32_t b) const -> std::uint32_t;
        auto mul(std::uint32_t a, std::uint32_t b) const -> std::uint32_t;
        auto pow(std::uint32_t a, std::uint64_t e) const -> std::uint32_t;

        /// N(a) = a^(q+1), which lies in the prime field; returned as 0..q-1.
        auto norm(std::uint32_t a) const -> std::uint32_t;

        static auto from_coefficients(std::uint32_t q, std::uint32_t a0, std::uint32_t a1) -> std::uint32_t { return a0 + q * a1; }

    private:
        std::uint32_t _q, _c1 = 0, _c0 = 0;
    };

    /// Norm graph for r = 3, t = 1: vertices (A, a) with A in F_{q^2} and
    /// a in F_q^*, and (A, a) ~ (B, b) iff N(A + B) = ab. The relation is
    /// symmetric; its fixed points N(2A) = a^2 are loops, which `adjacency`
    /// omits and `loop` records.
    struct NormGraph
    {
        std::uint32_t q = 0;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> label;   // vertex -> (A, a)
        std::vector<std::vector<std::uint32_t>> adjacency;           // loop-free, sorted
        std::vector<bool> loop;

        auto order() const -> std::size_t { return label.size(); }

        /// Degree in the norm relation, a loop counting once.
        auto relation_degree(std::size_t v) const -> std::size_t { return adjacency[v].size() + (loop[v] ? 1 : 0); }

        /// The relation as a host with A = B = V (loops included), for
        /// common-neighbour censuses of the underlying graph.
        auto relation_host() const -> BipartiteHost;
    };

    auto build_norm_graph(std::uint32_t q) -> NormGraph;

    struct NormHost
    {
        BipartiteHost host;
        HostCertificate certificate;
        std::vector<std::uint32_t> a_side;    // host A index -> norm graph vertex
        std::vector<std::uint32_t> b_side;    // host B index -> norm graph vertex
        std::size_t min_b_degree = 0;
        std::size_t attempts = 0;
    };

    inline constexpr std::size_t default_norm_bipartition_retries = 50;

    /// Default B-degree floor k = floor(q^2 / (2r)) with r = 3, i.e. the
    /// largest k with q^(r-1) >= 2rk.
    auto default_norm_degree_floor(std::uint32_t q) -> std::size_t;

    /// Splits the norm graph into A and B, each vertex going to B with
    /// probability 1/4 (seeds derive_seed(seed, attempt)), until every
    /// A-vertex has at least min_b_degree neighbours in B and |A| > 2|B|.
    /// The certificate (r = 3) is recomputed by census over triples of A.
    /// Throws Error when q < 3 or q is not prime, ConstructionError when the
    /// retry budget runs out.
    auto norm_graph_host(std::uint32_t q, std::size_t min_b_degree, std::uint64_t seed,
            std::size_t retries = default_norm_bipartition_retries) -> NormHost;
}
