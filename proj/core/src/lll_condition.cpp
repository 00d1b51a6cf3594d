#include <itlab/error.hpp>
#include <itlab/lll_condition.hpp>

#include <cmath>

namespace itlab
{
    auto check_lll_condition(const Hypergraph & g) -> LllCondition
    {
        if (g.uniformity() != 2)
            throw Error("check_lll_condition works on graphs only (r = 2)");
        LllCondition c;
        if (g.num_parts() == 0)
            return c;
        c.part_size = g.part(0).size();
        if (! has_uniform_part_size(g, c.part_size))
            throw Error("check_lll_condition needs parts of equal size; trim first (max_degree_trim)");
        if (g.num_edges() == 0)
            return c;

        std::vector<std::size_t> sums(g.num_parts());
        for (PartId i = 0; i < g.num_parts(); ++i)
            sums[i] = degree_sum_of_part(g, i);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            auto dep = sums[g.part_of(ev[0])] + sums[g.part_of(ev[1])] - 2;
            if (! c.witness || dep > c.max_dependency) {
                c.max_dependency = dep;
                c.witness = e;
            }
        }
        auto n = static_cast<double>(c.part_size);
        c.value = std::exp(1.0) * static_cast<double>(c.max_dependency + 1) / (n * n);
        c.ok = c.value <= 1.0 + 1e-12;
        return c;
    }
}
