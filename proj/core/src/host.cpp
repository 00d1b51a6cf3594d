#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/host.hpp>
#include <itlab/random.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace itlab
{
    BipartiteHost::BipartiteHost(std::size_t m, std::vector<std::vector<std::uint32_t>> adjacency) :
        _m(m),
        _adjacency(std::move(adjacency))
    {
        for (std::size_t a = 0; a < _adjacency.size(); ++a) {
            auto & list = _adjacency[a];
            std::sort(list.begin(), list.end());
            if (! list.empty() && list.back() >= m)
                throw Error("host: neighbour " + std::to_string(list.back()) + " of A-vertex " + std::to_string(a) + " is not in B");
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw Error("host: repeated neighbour of A-vertex " + std::to_string(a));
        }
    }

    auto BipartiteHost::min_degree() const -> std::size_t
    {
        if (_adjacency.empty())
            return 0;
        std::size_t best = _adjacency.front().size();
        for (auto & list : _adjacency)
            best = std::min(best, list.size());
        return best;
    }

    auto BipartiteHost::num_edges() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto & list : _adjacency)
            total += list.size();
        return total;
    }

    auto BipartiteHost::without_b_vertex(std::uint32_t b) const -> BipartiteHost
    {
        if (b >= _m)
            throw Error("host: no B-vertex " + std::to_string(b));
        auto adjacency = _adjacency;
        for (auto & list : adjacency) {
            list.erase(std::remove(list.begin(), list.end(), b), list.end());
            for (auto & x : list)
                if (x > b)
                    --x;
        }
        return BipartiteHost{_m - 1, std::move(adjacency)};
    }

    auto certify(const BipartiteHost & h, std::size_t r) -> HostCertificate
    {
        return HostCertificate{h.min_degree(), common_neighbour_census(h, r).max_common, r};
    }

    auto random_host(std::size_t n, std::size_t m, double p, std::uint64_t seed) -> BipartiteHost
    {
        Rng rng(seed);
        std::vector<std::vector<std::uint32_t>> adjacency(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                if (rng.bernoulli(p))
                    adjacency[a].push_back(b);
        return BipartiteHost{m, std::move(adjacency)};
    }

    auto complete_host(std::size_t n, std::size_t m) -> BipartiteHost
    {
        std::vector<std::vector<std::uint32_t>> adjacency(n);
        for (auto & list : adjacency)
            for (std::uint32_t b = 0; b < m; ++b)
                list.push_back(b);
        return BipartiteHost{m, std::move(adjacency)};
    }

    auto random_host_constant(std::size_t r, double eps) -> double
    {
        return 10.0 * static_cast<double>(r) * std::pow(eps, -4.0);
    }

    auto random_bipartite_host(std::size_t n, std::size_t m, std::size_t r, std::size_t s, double eps,
            std::uint64_t seed, std::size_t retries, double host_constant) -> RandomHostResult
    {
        auto rd = static_cast<double>(r);
        if (r < 2)
            throw ConstructionError("random host: r must be at least 2");
        if (n < r)
            throw ConstructionError("random host: need n >= r (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
        if (! (eps > 0.0) || eps > 1.0 / rd + 1e-12)
            throw ConstructionError("random host: eps must lie in (0, 1/r]");
        if (s > m)
            throw ConstructionError("random host: need m >= s (m=" + std::to_string(m) + ", s=" + std::to_string(s) + ")");
        auto constant = host_constant > 0.0 ? host_constant : random_host_constant(r, eps);
        auto s_min = constant * std::log(static_cast<double>(n));
        if (static_cast<double>(s) < s_min) {
            std::ostringstream msg;
            msg << "random host: need s >= C log n = " << s_min << " (C=" << constant << "), got s=" << s;
            throw ConstructionError(msg.str());
        }

        RandomHostResult result;
        result.edge_probability = std::min(1.0, (1.0 - eps / 2.0) * std::pow(static_cast<double>(s) / static_cast<double>(m), 1.0 / rd));
        result.degree_floor = (1.0 - eps) * std::pow(static_cast<double>(s), 1.0 / rd) * std::pow(static_cast<double>(m), 1.0 - 1.0 / rd);

        std::string last_failure = "no attempts made";
        for (std::size_t attempt = 0; attempt < retries; ++attempt) {
            auto host = random_host(n, m, result.edge_probability, derive_seed(seed, attempt));
            auto min_degree = host.min_degree();
            if (static_cast<double>(min_degree) < result.degree_floor) {
                last_failure = "min A-degree " + std::to_string(min_degree) + " below floor " + std::to_string(result.degree_floor);
                continue;
            }
            auto census = common_neighbour_census(host, r);
            if (census.max_common > s) {
                last_failure = "an r-subset of A has " + std::to_string(census.max_common) + " > s common neighbours";
                continue;
            }
            result.host = std::move(host);
            result.certificate = HostCertificate{min_degree, census.max_common, r};
            result.attempts = attempt + 1;
            return result;
        }
        throw ConstructionError("random host: retry budget of " + std::to_string(retries) + " exhausted; last failure: " + last_failure);
    }
}
