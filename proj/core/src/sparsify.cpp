#include <itlab/error.hpp>
#include <itlab/random.hpp>
#include <itlab/sparsify.hpp>

#include <cmath>
#include <sstream>

namespace itlab
{
    namespace
    {
        auto evaluate(SparsifyResult & r, double eps) -> void
        {
            const auto & h = r.sub.graph;
            r.min_size = min_part_size(h);
            r.max_avg_degree = max_avg_degree(h);
            r.local_degree = local_degree(h);
            auto log_d = r.d_prime > 1.0 ? std::log(r.d_prime) : 0.0;
            std::ostringstream why;
            if (static_cast<double>(r.min_size) < (1.0 + eps / 2.0) * r.d_prime)
                why << "min part size " << r.min_size << " < (1+eps/2)D' = " << (1.0 + eps / 2.0) * r.d_prime;
            else if (r.max_avg_degree > r.d_prime)
                why << "average degree " << r.max_avg_degree << " > D' = " << r.d_prime;
            else if (static_cast<double>(r.local_degree) > log_d * log_d)
                why << "local degree " << r.local_degree << " > log^2 D' = " << log_d * log_d;
            r.failed = why.str();
            r.verified = r.failed.empty();
        }
    }

    auto sparsify_local_degree(const Hypergraph & g, double gamma, double eps, std::uint64_t seed,
            std::size_t retries) -> SparsifyResult
    {
        if (g.uniformity() != 2)
            throw Error("sparsify_local_degree works on graphs only (r = 2)");
        if (! (gamma > 0.0 && gamma <= 1.0))
            throw Error("sparsify_local_degree: gamma must lie in (0, 1]");

        auto d = max_avg_degree(g);
        auto local = static_cast<double>(local_degree(g));
        if (d > 0 && local > std::pow(d, 1.0 - gamma) + 1e-9) {
            std::ostringstream msg;
            msg << "sparsify_local_degree: local degree " << local << " exceeds D^(1-gamma) = " << std::pow(d, 1.0 - gamma);
            throw Error(msg.str());
        }

        auto keep_prob = d > 0 ? std::min(1.0, std::pow(d, gamma - 1.0)) : 1.0;
        auto d_prime = (1.0 + eps / 4.0) * std::pow(d, gamma);

        if (keep_prob >= 1.0) {
            SparsifyResult r{.sub = induced(g, std::vector<bool>(g.num_vertices(), true)), .d = d, .retention = 1.0, .d_prime = d_prime};
            r.attempts = 1;
            evaluate(r, eps);
            return r;
        }

        std::string last;
        for (std::size_t attempt = 0; attempt < retries; ++attempt) {
            Rng rng(derive_seed(seed, attempt));
            std::vector<bool> keep(g.num_vertices());
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                keep[v] = rng.bernoulli(keep_prob);
            SparsifyResult r{.sub = induced(g, keep), .d = d, .retention = keep_prob, .d_prime = d_prime};
            r.attempts = attempt + 1;
            evaluate(r, eps);
            if (r.verified)
                return r;
            last = r.failed;
        }
        throw Error("sparsify_local_degree: " + std::to_string(retries) + " attempts failed; last: " + last);
    }
}
