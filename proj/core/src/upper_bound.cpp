#include <itlab/error.hpp>
#include <itlab/incidence.hpp>
#include <itlab/norm_graph.hpp>
#include <itlab/primes.hpp>
#include <itlab/projective.hpp>
#include <itlab/random.hpp>
#include <itlab/upper_bound.hpp>

#include <cmath>
#include <sstream>

namespace itlab
{
    namespace
    {
        constexpr const char * supported_regimes =
            "supported regimes: r=2,s=1 (projective plane); r=3,s=2 (norm graph); r in {2,3} with C log k <= s <= k (random host)";

        auto not_implemented(std::size_t k, std::size_t r, std::size_t s, const std::string & detail = {}) -> ConstructionError
        {
            std::ostringstream msg;
            msg << "construction not implemented for k=" << k << ", r=" << r << ", s=" << s;
            if (! detail.empty())
                msg << " (" << detail << ")";
            msg << "; " << supported_regimes;
            return ConstructionError(msg.str());
        }

        auto finish(const BipartiteHost & host, Provenance provenance, std::size_t k, std::size_t r, std::size_t s,
                std::uint64_t seed) -> UpperBoundInstance
        {
            provenance.k = k;
            provenance.r = r;
            provenance.s = s;
            provenance.n = host.n();
            provenance.m = host.m();
            provenance.seed = seed;
            provenance.pigeonhole = verify_no_transversal_by_pigeonhole(host, r);
            if (! provenance.pigeonhole)
                throw ConstructionError("upper bound: host does not satisfy m (r - 1) < n");
            if (provenance.certificate.min_degree_a < k)
                throw ConstructionError("upper bound: host minimum degree " + std::to_string(provenance.certificate.min_degree_a) + " is below k=" + std::to_string(k));
            if (provenance.certificate.max_common_neighbours > s)
                throw ConstructionError("upper bound: host has r-subsets with more than s common neighbours");

            auto incidence = neighbourhood_incidence_graph(host, r);
            auto graph = pad_to_nkrs(incidence, k, s, derive_seed(seed, 0x9ad));
            return UpperBoundInstance{std::move(graph), std::move(provenance)};
        }
    }

    auto to_json(const Provenance & p) -> nlohmann::json
    {
        nlohmann::json j{
            {"host_type", p.host_type},
            {"k", p.k}, {"r", p.r}, {"s", p.s},
            {"host_n", p.n}, {"host_m", p.m},
            {"certificate", {{"min_degree_a", p.certificate.min_degree_a},
                                {"max_common_neighbours", p.certificate.max_common_neighbours},
                                {"r", p.certificate.r}}},
            {"pigeonhole", p.pigeonhole},
            {"host_attempts", p.host_attempts},
            {"retry_budget", p.retry_budget},
            {"seed", p.seed},
        };
        if (p.q)
            j["q"] = *p.q;
        if (p.eps)
            j["eps"] = *p.eps;
        if (p.host_constant)
            j["host_constant"] = *p.host_constant;
        return j;
    }

    auto assemble_upper_bound_instance(std::size_t k, std::size_t r, std::size_t s, std::uint64_t seed,
            const UpperBoundOptions & options) -> UpperBoundInstance
    {
        if (k < 1)
            throw ConstructionError("upper bound: k must be positive");

        if (r == 2 && s == 1) {
            auto q = find_prime_in_ap(std::max<std::size_t>(k, 2), 1, 1);
            auto certified = projective_plane_host(static_cast<std::uint32_t>(q));
            Provenance p;
            p.host_type = "projective-plane";
            p.q = q;
            p.certificate = certified.certificate;
            p.host_attempts = 1;
            return finish(certified.host, std::move(p), k, r, s, seed);
        }

        if (r == 3 && s == 2) {
            if (k < s)
                throw not_implemented(k, r, s, "padding needs s <= k");
            auto x = std::max<std::uint64_t>(3, static_cast<std::uint64_t>(std::ceil(std::sqrt(6.0 * static_cast<double>(k)))));
            auto q = find_prime_in_ap(x, 1, 1);
            while (q * q < 6 * k)
                q = find_prime_in_ap(q + 1, 1, 1);
            auto norm = norm_graph_host(static_cast<std::uint32_t>(q), k, seed);
            Provenance p;
            p.host_type = "norm-graph";
            p.q = q;
            p.certificate = norm.certificate;
            p.host_attempts = norm.attempts;
            p.retry_budget = default_norm_bipartition_retries;
            return finish(norm.host, std::move(p), k, r, s, seed);
        }

        if (r == 2 || r == 3) {
            auto host_eps = options.eps * options.eps;
            auto constant = options.host_constant > 0.0 ? options.host_constant : random_host_constant(r, host_eps);
            auto ks = static_cast<double>(k);
            if (s == 0 || s > k || static_cast<double>(s) < constant * std::log(ks))
                throw not_implemented(k, r, s, "random-host regime needs C log k <= s <= k with C=" + std::to_string(constant));
            auto rd = static_cast<double>(r);
            auto n = static_cast<std::size_t>(std::floor((rd - 1.0 + options.eps) * std::pow(std::pow(ks, rd) / static_cast<double>(s), 1.0 / (rd - 1.0))));
            auto m_signed = static_cast<long long>(n / (r - 1)) - 1;
            if (m_signed < static_cast<long long>(s))
                throw ConstructionError("upper bound: random-host regime gives m=" + std::to_string(m_signed) + " < s");
            auto sampled = random_bipartite_host(n, static_cast<std::size_t>(m_signed), r, s, host_eps, seed,
                    default_random_host_retries, options.host_constant);
            Provenance p;
            p.host_type = "random-host";
            p.certificate = sampled.certificate;
            p.host_attempts = sampled.attempts;
            p.retry_budget = default_random_host_retries;
            p.eps = options.eps;
            p.host_constant = constant;
            return finish(sampled.host, std::move(p), k, r, s, seed);
        }

        throw not_implemented(k, r, s);
    }
}
