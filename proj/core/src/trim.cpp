#include <itlab/error.hpp>
#include <itlab/trim.hpp>

#include <cmath>
#include <sstream>

namespace itlab
{
    namespace
    {
        constexpr double slack = 1e-9;

        auto part_error(PartId i, const std::string & what) -> Error
        {
            return Error("max_degree_trim: part " + std::to_string(i) + " " + what);
        }
    }

    auto max_degree_trim(const Hypergraph & g, double eps) -> TrimResult
    {
        if (! (eps > 0.0))
            throw Error("max_degree_trim: eps must be positive");

        auto d = max_avg_degree(g);
        auto d_prime = d / (1.0 - eps / 8.0);
        for (PartId i = 0; i < g.num_parts(); ++i) {
            auto size = static_cast<double>(g.part(i).size());
            if (size == 0.0 || size < (1.0 + eps) * d - slack) {
                std::ostringstream msg;
                msg << "has " << size << " vertices, fewer than (1+eps)D = " << (1.0 + eps) * d;
                throw part_error(i, msg.str());
            }
        }

        auto threshold = 8.0 * d / eps;
        std::vector<bool> keep(g.num_vertices(), true);
        std::vector<std::size_t> removed(g.num_parts(), 0);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (static_cast<double>(g.degree(v)) > threshold) {
                keep[v] = false;
                ++removed[g.part_of(v)];
            }
        auto sub = induced(g, keep);

        auto & h = sub.graph;
        for (PartId i = 0; i < h.num_parts(); ++i) {
            auto before = static_cast<double>(g.part(i).size());
            auto size = static_cast<double>(h.part(i).size());
            if (static_cast<double>(removed[i]) > eps * before / 8.0 + slack)
                throw part_error(i, "lost more than eps|V_i|/8 vertices");
            if (size < (1.0 + eps / 2.0) * d_prime - slack)
                throw part_error(i, "is smaller than (1+eps/2)D' after trimming");
            if (d > 0 && avg_degree_of_part(h, i).to_double() > d_prime + slack)
                throw part_error(i, "has average degree above D' after trimming");
        }
        if (static_cast<double>(h.max_degree()) > 8.0 * d_prime / eps + slack)
            throw Error("max_degree_trim: maximum degree above 8D'/eps after trimming");
        return TrimResult{std::move(sub), d, d_prime, std::move(removed)};
    }
}
