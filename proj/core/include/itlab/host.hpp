#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace itlab
{
    /// Bipartite graph with sides A = {0..n-1} and B = {0..m-1}, stored as
    /// the sorted B-neighbourhood of every A-vertex.
    class BipartiteHost
    {
    public:
        BipartiteHost() = default;

        /// Sorts each list; throws Error on out-of-range or repeated ids.
        BipartiteHost(std::size_t m, std::vector<std::vector<std::uint32_t>> adjacency);

        auto n() const -> std::size_t { return _adjacency.size(); }
        auto m() const -> std::size_t { return _m; }

        auto neighbours(std::size_t a) const -> std::span<const std::uint32_t> { return _adjacency[a]; }
        auto adjacency() const -> const std::vector<std::vector<std::uint32_t>> & { return _adjacency; }
        auto degree(std::size_t a) const -> std::size_t { return _adjacency[a].size(); }
        auto min_degree() const -> std::size_t;
        auto num_edges() const -> std::size_t;

        /// Copy without the B-vertex b; higher B ids shift down by one.
        auto without_b_vertex(std::uint32_t b) const -> BipartiteHost;

        friend auto operator==(const BipartiteHost &, const BipartiteHost &) -> bool = default;

    private:
        std::size_t _m = 0;
        std::vector<std::vector<std::uint32_t>> _adjacency;
    };

    /// The two numbers that certify w(n, m; r, s) >= k for a host:
    /// every A-vertex has degree >= min_degree_a and any r A-vertices have
    /// at most max_common_neighbours common neighbours.
    struct HostCertificate
    {
        std::size_t min_degree_a = 0;
        std::size_t max_common_neighbours = 0;
        std::size_t r = 2;

        friend auto operator==(const HostCertificate &, const HostCertificate &) -> bool = default;
    };

    /// Recomputes the certificate of h for r-subsets (exhaustive census).
    auto certify(const BipartiteHost & h, std::size_t r) -> HostCertificate;

    /// Plain random host: each A-B pair independently with probability p.
    auto random_host(std::size_t n, std::size_t m, double p, std::uint64_t seed) -> BipartiteHost;

    auto complete_host(std::size_t n, std::size_t m) -> BipartiteHost;

    struct RandomHostResult
    {
        BipartiteHost host;
        HostCertificate certificate;
        double edge_probability = 0.0;
        double degree_floor = 0.0;
        std::size_t attempts = 0;
    };

    inline constexpr std::size_t default_random_host_retries = 20;

    /// The constant C = 10 r eps^-4 in the requirement s >= C log n.
    auto random_host_constant(std::size_t r, double eps) -> double;

    /// Host for the large-s regime: edge probability (1 - eps/2)(s/m)^(1/r),
    /// capped at 1, resampled with seeds derive_seed(seed, attempt) until
    /// every r-subset of A has at most s common neighbours and every A-degree
    /// is at least (1 - eps) s^(1/r) m^(1 - 1/r).
    ///
    /// Requires n >= r, eps in (0, 1/r] and m >= s >= C log n with
    /// C = random_host_constant(r, eps) unless `host_constant` overrides C.
    /// Throws ConstructionError on a domain violation or when the retry
    /// budget runs out, naming the condition that failed last.
    auto random_bipartite_host(std::size_t n, std::size_t m, std::size_t r, std::size_t s, double eps,
            std::uint64_t seed, std::size_t retries = default_random_host_retries,
            double host_constant = 0.0) -> RandomHostResult;
}
