#include <itlab/error.hpp>
#include <itlab/lll.hpp>
#include <itlab/random.hpp>

#include <algorithm>
#include <set>

namespace itlab
{
    auto default_lll_rounds(const Hypergraph & g) -> std::size_t
    {
        return std::max<std::size_t>(100, 50 * g.num_edges());
    }

    auto lll_sample(const Hypergraph & g, std::size_t max_rounds, std::uint64_t seed) -> LllResult
    {
        if (g.uniformity() != 2)
            throw Error("lll_sample works on graphs only (r = 2)");
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (g.part(i).empty())
                throw Error("lll_sample: part " + std::to_string(i) + " is empty");

        Rng rng(seed);
        std::vector<bool> picked(g.num_vertices(), false);
        std::set<EdgeId> violated;
        LllResult result;
        result.transversal = Transversal(g.num_parts());

        auto other_end = [&](EdgeId e, VertexId v) {
            auto ev = g.edge(e);
            return ev[0] == v ? ev[1] : ev[0];
        };
        auto draw = [&](PartId i) {
            if (auto old = result.transversal.at(i)) {
                picked[*old] = false;
                for (auto e : g.incident_edges(*old))
                    violated.erase(e);
            }
            auto part = g.part(i);
            auto v = part[rng.uniform_index(part.size())];
            result.transversal.assign(i, v);
            picked[v] = true;
            for (auto e : g.incident_edges(v))
                if (picked[other_end(e, v)])
                    violated.insert(e);
        };

        for (PartId i = 0; i < g.num_parts(); ++i)
            draw(i);

        while (! violated.empty()) {
            if (result.resamples == max_rounds)
                return result;
            auto e = *violated.begin();
            auto ev = g.edge(e);
            auto a = g.part_of(ev[0]);
            auto b = g.part_of(ev[1]);
            draw(a);
            draw(b);
            ++result.resamples;
        }
        result.success = true;
        return result;
    }
}
