#include <itlab/census.hpp>
#include <itlab/error.hpp>
#include <itlab/random.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace itlab
{
    namespace
    {
        using Bits = std::vector<std::uint64_t>;

        auto host_bitsets(const BipartiteHost & h) -> std::vector<Bits>
        {
            auto words = (h.m() + 63) / 64;
            std::vector<Bits> result(h.n(), Bits(words, 0));
            for (std::size_t a = 0; a < h.n(); ++a)
                for (auto b : h.neighbours(a))
                    result[a][b / 64] |= std::uint64_t{1} << (b % 64);
            return result;
        }

        auto popcount(const Bits & bits) -> std::size_t
        {
            std::size_t total = 0;
            for (auto w : bits)
                total += static_cast<std::size_t>(std::popcount(w));
            return total;
        }

        auto random_r_subset(Rng & rng, std::size_t n, std::size_t r) -> std::vector<std::uint32_t>
        {
            std::vector<std::uint32_t> subset;
            while (subset.size() < r) {
                auto x = static_cast<std::uint32_t>(rng.uniform_index(n));
                if (std::find(subset.begin(), subset.end(), x) == subset.end())
                    subset.push_back(x);
            }
            std::sort(subset.begin(), subset.end());
            return subset;
        }

        /// Advances `c` to the next r-combination of 0..n-1 in lexicographic order.
        auto next_combination(std::vector<PartId> & c, std::size_t n) -> bool
        {
            auto r = c.size();
            for (std::size_t i = r; i-- > 0;) {
                if (c[i] < n - r + i) {
                    ++c[i];
                    for (auto j = i + 1; j < r; ++j)
                        c[j] = c[j - 1] + 1;
                    return true;
                }
            }
            return false;
        }
    }

    auto binomial(std::size_t n, std::size_t r) -> double
    {
        if (r > n)
            return 0.0;
        r = std::min(r, n - r);
        double result = 1.0;
        for (std::size_t i = 1; i <= r; ++i)
            result = result * static_cast<double>(n - r + i) / static_cast<double>(i);
        return std::round(result);
    }

    auto common_neighbour_census(const BipartiteHost & h, std::size_t r, double budget) -> CommonNeighbourCensus
    {
        CommonNeighbourCensus result;
        result.r_subsets = binomial(h.n(), r);
        if (r == 0 || h.n() < r)
            return result;
        if (result.r_subsets > budget)
            throw Error("common-neighbour census: C(" + std::to_string(h.n()) + ", " + std::to_string(r) + ") r-subsets exceed the census budget");

        auto bits = host_bitsets(h);
        auto words = (h.m() + 63) / 64;
        std::vector<Bits> stack(r + 1, Bits(words, ~std::uint64_t{0}));
        std::vector<std::uint32_t> chosen;
        bool have_witness = false;

        // Depth-first over r-subsets with the running intersection; a subtree
        // whose partial intersection is already no larger than the best found
        // cannot improve the maximum.
        std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t depth, std::size_t start) {
            if (depth == r) {
                auto count = popcount(stack[depth]);
                if (! have_witness || count > result.max_common) {
                    result.max_common = count;
                    result.witness = chosen;
                    have_witness = true;
                }
                return;
            }
            for (auto a = start; a + (r - depth) <= h.n(); ++a) {
                for (std::size_t w = 0; w < words; ++w)
                    stack[depth + 1][w] = stack[depth][w] & bits[a][w];
                if (have_witness && popcount(stack[depth + 1]) <= result.max_common)
                    continue;
                chosen.push_back(static_cast<std::uint32_t>(a));
                visit(depth + 1, a + 1);
                chosen.pop_back();
            }
        };
        if (h.m() % 64 != 0 && words > 0)
            stack[0][words - 1] = (std::uint64_t{1} << (h.m() % 64)) - 1;
        if (words == 0) {
            result.witness.resize(r);
            std::iota(result.witness.begin(), result.witness.end(), 0u);
            return result;
        }
        visit(0, 0);
        return result;
    }

    auto sampled_common_neighbour_census(const BipartiteHost & h, std::size_t r, std::size_t samples,
            std::uint64_t seed) -> CommonNeighbourCensus
    {
        CommonNeighbourCensus result;
        result.r_subsets = binomial(h.n(), r);
        if (r == 0 || h.n() < r)
            return result;
        auto bits = host_bitsets(h);
        Rng rng(seed);
        bool have_witness = false;
        Bits acc;
        for (std::size_t i = 0; i < samples; ++i) {
            auto subset = random_r_subset(rng, h.n(), r);
            acc = bits[subset[0]];
            for (std::size_t j = 1; j < r; ++j)
                for (std::size_t w = 0; w < acc.size(); ++w)
                    acc[w] &= bits[subset[j]][w];
            auto count = popcount(acc);
            if (! have_witness || count > result.max_common) {
                result.max_common = count;
                result.witness = subset;
                have_witness = true;
            }
        }
        return result;
    }

    auto matching_census(const Hypergraph & g, double budget, std::uint64_t seed) -> MatchingCensus
    {
        auto r = g.uniformity();
        auto m = g.num_parts();

        MatchingCensus census;
        census.total_r_sets = binomial(m, r);
        if (m < r)
            return census;

        // Edges meeting r distinct parts, keyed by their sorted part tuple;
        // the rest are checked against every r-set by containment.
        std::vector<PartId> keys(g.num_edges() * r);
        std::vector<EdgeId> rainbow;
        std::vector<EdgeId> others;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto key = std::span<PartId>(keys.data() + std::size_t{e} * r, r);
            auto ev = g.edge(e);
            for (std::size_t j = 0; j < r; ++j)
                key[j] = g.part_of(ev[j]);
            std::sort(key.begin(), key.end());
            if (std::adjacent_find(key.begin(), key.end()) == key.end())
                rainbow.push_back(e);
            else
                others.push_back(e);
        }
        auto key_of = [&](EdgeId e) { return std::span<const PartId>(keys.data() + std::size_t{e} * r, r); };
        auto key_less = [&](std::span<const PartId> a, std::span<const PartId> b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        };
        std::sort(rainbow.begin(), rainbow.end(), [&](EdgeId a, EdgeId b) {
            auto ka = key_of(a), kb = key_of(b);
            if (std::equal(ka.begin(), ka.end(), kb.begin()))
                return a < b;
            return key_less(ka, kb);
        });

        std::vector<VertexId> scratch;
        auto record = [&](const std::vector<PartId> & parts, std::span<const EdgeId> inside) {
            CensusEntry entry;
            entry.parts = parts;
            scratch.clear();
            for (auto e : inside) {
                auto ev = g.edge(e);
                scratch.insert(scratch.end(), ev.begin(), ev.end());
            }
            for (auto e : others) {
                auto k = key_of(e);
                if (std::includes(parts.begin(), parts.end(), k.begin(), k.end())) {
                    auto ev = g.edge(e);
                    scratch.insert(scratch.end(), ev.begin(), ev.end());
                    ++entry.edges;
                }
            }
            entry.edges += inside.size();
            std::sort(scratch.begin(), scratch.end());
            entry.is_matching = std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
            census.entries.push_back(std::move(entry));
        };

        if (census.total_r_sets <= budget) {
            std::vector<PartId> combo(r);
            std::iota(combo.begin(), combo.end(), PartId{0});
            std::size_t cursor = 0;
            census.entries.reserve(static_cast<std::size_t>(census.total_r_sets));
            do {
                std::span<const PartId> current(combo);
                while (cursor < rainbow.size() && key_less(key_of(rainbow[cursor]), current))
                    ++cursor;
                auto begin = cursor;
                while (cursor < rainbow.size() && std::ranges::equal(key_of(rainbow[cursor]), current))
                    ++cursor;
                record(combo, std::span<const EdgeId>(rainbow.data() + begin, cursor - begin));
            } while (next_combination(combo, m));
        }
        else {
            census.partial = true;
            Rng rng(seed);
            auto samples = static_cast<std::size_t>(budget);
            for (std::size_t i = 0; i < samples; ++i) {
                auto subset = random_r_subset(rng, m, r);
                std::vector<PartId> combo(subset.begin(), subset.end());
                std::span<const PartId> current(combo);
                auto lo = std::lower_bound(rainbow.begin(), rainbow.end(), current,
                        [&](EdgeId e, std::span<const PartId> k) { return key_less(key_of(e), k); });
                auto hi = lo;
                while (hi != rainbow.end() && std::ranges::equal(key_of(*hi), current))
                    ++hi;
                record(combo, std::span<const EdgeId>(rainbow.data() + (lo - rainbow.begin()), static_cast<std::size_t>(hi - lo)));
            }
        }

        if (! census.entries.empty()) {
            census.min_edges = census.max_edges = census.entries.front().edges;
            for (auto & e : census.entries) {
                census.min_edges = std::min(census.min_edges, e.edges);
                census.max_edges = std::max(census.max_edges, e.edges);
                census.all_matchings = census.all_matchings && e.is_matching;
            }
        }
        return census;
    }

    auto check_nkrs(const Hypergraph & g, std::size_t k, std::size_t s, double budget) -> RegularityCheck
    {
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (g.part(i).size() != k)
                return {false, "part " + std::to_string(i) + " has size " + std::to_string(g.part(i).size()) + ", expected " + std::to_string(k)};
        auto census = matching_census(g, budget);
        if (census.partial)
            return {false, "census is partial (too many r-sets for the budget)"};
        for (auto & entry : census.entries) {
            if (entry.edges != s || ! entry.is_matching) {
                std::string parts;
                for (auto p : entry.parts)
                    parts += (parts.empty() ? "" : ",") + std::to_string(p);
                return {false, "r-set {" + parts + "} induces " + std::to_string(entry.edges) + " edges" + (entry.is_matching ? "" : " (not a matching)") + ", expected " + std::to_string(s)};
            }
        }
        return {true, {}};
    }
}
