#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/norm_graph.hpp>
#include <itlab/primes.hpp>
#include <itlab/random.hpp>

#include <algorithm>

namespace itlab
{
    QuadraticField::QuadraticField(std::uint32_t q) : _q(q)
    {
        if (! is_prime(q))
            throw Error("F_{q^2}: q=" + std::to_string(q) + " is not prime");
        for (std::uint32_t c1 = 0; c1 < q; ++c1)
            for (std::uint32_t c0 = 0; c0 < q; ++c0) {
                bool has_root = false;
                for (std::uint64_t x = 0; x < q && ! has_root; ++x)
                    has_root = (x * x + c1 * x + c0) % q == 0;
                if (! has_root) {
                    _c1 = c1;
                    _c0 = c0;
                    return;
                }
            }
        throw Error("F_{q^2}: no irreducible quadratic found");
    }

    auto QuadraticField::add(std::uint32_t a, std::uint32_t b) const -> std::uint32_t
    {
        return (a % _q + b % _q) % _q + _q * ((a / _q + b / _q) % _q);
    }

    auto QuadraticField::mul(std::uint32_t a, std::uint32_t b) const -> std::uint32_t
    {
        std::uint64_t a0 = a % _q, a1 = a / _q, b0 = b % _q, b1 = b / _q;
        std::uint64_t q = _q;
        auto constant = (a0 * b0) % q;
        auto linear = (a0 * b1 + a1 * b0) % q;
        auto square = (a1 * b1) % q;
        // x^2 = -c1 x - c0
        constant = (constant + square * ((q - _c0) % q)) % q;
        linear = (linear + square * ((q - _c1) % q)) % q;
        return static_cast<std::uint32_t>(constant + q * linear);
    }

    auto QuadraticField::pow(std::uint32_t a, std::uint64_t e) const -> std::uint32_t
    {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1)
                result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    auto QuadraticField::norm(std::uint32_t a) const -> std::uint32_t
    {
        auto n = pow(a, std::uint64_t{_q} + 1);
        if (n >= _q)
            throw Error("F_{q^2}: norm left the prime field");
        return n;
    }

    auto NormGraph::relation_host() const -> BipartiteHost
    {
        auto adj = adjacency;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (loop[v])
                adj[v].push_back(static_cast<std::uint32_t>(v));
        return BipartiteHost{order(), std::move(adj)};
    }

    auto build_norm_graph(std::uint32_t q) -> NormGraph
    {
        if (q < 3)
            throw Error("norm graph: q must be a prime >= 3");
        QuadraticField field(q);

        NormGraph g;
        g.q = q;
        for (std::uint32_t big = 0; big < field.size(); ++big)
            for (std::uint32_t small = 1; small < q; ++small)
                g.label.emplace_back(big, small);

        std::vector<std::uint32_t> norms(field.size());
        for (std::uint32_t x = 0; x < field.size(); ++x)
            norms[x] = field.norm(x);

        auto n = g.order();
        g.adjacency.assign(n, {});
        g.loop.assign(n, false);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u; v < n; ++v) {
                auto [a_big, a_small] = g.label[u];
                auto [b_big, b_small] = g.label[v];
                if (norms[field.add(a_big, b_big)] != (std::uint64_t{a_small} * b_small) % q)
                    continue;
                if (u == v)
                    g.loop[u] = true;
                else {
                    g.adjacency[u].push_back(static_cast<std::uint32_t>(v));
                    g.adjacency[v].push_back(static_cast<std::uint32_t>(u));
                }
            }
        for (auto & list : g.adjacency)
            std::sort(list.begin(), list.end());
        return g;
    }

    auto default_norm_degree_floor(std::uint32_t q) -> std::size_t
    {
        return std::size_t{q} * q / 6;
    }

    auto norm_graph_host(std::uint32_t q, std::size_t min_b_degree, std::uint64_t seed, std::size_t retries) -> NormHost
    {
        auto graph = build_norm_graph(q);
        auto n = graph.order();

        std::string last_failure = "no attempts made";
        for (std::size_t attempt = 0; attempt < retries; ++attempt) {
            Rng rng(derive_seed(seed, attempt));
            std::vector<bool> in_b(n);
            for (std::size_t v = 0; v < n; ++v)
                in_b[v] = rng.bernoulli(0.25);

            NormHost result;
            std::vector<std::uint32_t> b_index(n, 0);
            for (std::size_t v = 0; v < n; ++v)
                if (in_b[v]) {
                    b_index[v] = static_cast<std::uint32_t>(result.b_side.size());
                    result.b_side.push_back(static_cast<std::uint32_t>(v));
                }
                else
                    result.a_side.push_back(static_cast<std::uint32_t>(v));

            if (result.a_side.size() <= 2 * result.b_side.size()) {
                last_failure = "|A|=" + std::to_string(result.a_side.size()) + " not > 2|B|=" + std::to_string(2 * result.b_side.size());
                continue;
            }
            std::vector<std::vector<std::uint32_t>> adjacency;
            bool ok = true;
            for (auto v : result.a_side) {
                auto & list = adjacency.emplace_back();
                for (auto u : graph.adjacency[v])
                    if (in_b[u])
                        list.push_back(b_index[u]);
                if (list.size() < min_b_degree) {
                    last_failure = "a vertex of A has " + std::to_string(list.size()) + " < " + std::to_string(min_b_degree) + " neighbours in B";
                    ok = false;
                    break;
                }
            }
            if (! ok)
                continue;

            result.host = BipartiteHost{result.b_side.size(), std::move(adjacency)};
            result.certificate = certify(result.host, 3);
            result.min_b_degree = min_b_degree;
            result.attempts = attempt + 1;
            return result;
        }
        throw ConstructionError("norm graph bipartition: retry budget of " + std::to_string(retries) + " exhausted; last failure: " + last_failure);
    }
}
