#include <itlab/error.hpp>
#include <itlab/random.hpp>
#include <itlab/random_nkrs.hpp>

#include <numeric>

namespace itlab
{
    auto random_nkrs(std::size_t n, std::size_t k, std::size_t r, std::size_t s, std::uint64_t seed) -> Hypergraph
    {
        if (r < 2)
            throw Error("random (n,k,r,s)-graph: r must be at least 2");
        if (r > n)
            throw Error("random (n,k,r,s)-graph: r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
        if (k < 1)
            throw Error("random (n,k,r,s)-graph: k must be positive");
        if (s > k)
            throw Error("random (n,k,r,s)-graph: a matching needs s <= k (s=" + std::to_string(s) + ", k=" + std::to_string(k) + ")");

        std::vector<std::vector<VertexId>> parts(n);
        for (std::size_t i = 0; i < n; ++i) {
            parts[i].resize(k);
            std::iota(parts[i].begin(), parts[i].end(), static_cast<VertexId>(i * k));
        }

        std::vector<std::vector<VertexId>> edges;
        if (s > 0) {
            Rng rng(seed);
            std::vector<std::size_t> combo(r);
            std::iota(combo.begin(), combo.end(), std::size_t{0});
            std::vector<std::vector<VertexId>> slots(r, std::vector<VertexId>(k));
            while (true) {
                for (std::size_t j = 0; j < r; ++j) {
                    std::iota(slots[j].begin(), slots[j].end(), VertexId{0});
                    rng.shuffle_prefix(std::span<VertexId>(slots[j]), s);
                }
                for (std::size_t t = 0; t < s; ++t) {
                    auto & e = edges.emplace_back(r);
                    for (std::size_t j = 0; j < r; ++j)
                        e[j] = static_cast<VertexId>(combo[j] * k + slots[j][t]);
                }

                std::size_t i = r;
                while (i-- > 0 && combo[i] == n - r + i)
                    ;
                if (i == static_cast<std::size_t>(-1))
                    break;
                ++combo[i];
                for (auto j = i + 1; j < r; ++j)
                    combo[j] = combo[j - 1] + 1;
            }
        }
        return Hypergraph{r, std::move(parts), std::move(edges)};
    }
}
