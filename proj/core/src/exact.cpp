#include <itlab/exact.hpp>

#include <algorithm>
#include <numeric>

namespace itlab
{
    namespace
    {
        /// Shared backtracking state for exact_find and count_transversals.
        class Search
        {
        public:
            explicit Search(const Hypergraph & g) :
                _g(g),
                _r(g.uniformity()),
                _edge_count(g.num_edges(), 0),
                _blocked(g.num_vertices(), 0),
                _chosen(g.num_vertices(), false),
                _assigned(g.num_parts(), false),
                _live(g.num_parts(), 0),
                _current(g.num_parts())
            {
                _order.resize(g.num_parts());
                std::iota(_order.begin(), _order.end(), PartId{0});
                std::stable_sort(_order.begin(), _order.end(),
                        [&](PartId a, PartId b) { return g.part(a).size() < g.part(b).size(); });
                for (PartId i = 0; i < g.num_parts(); ++i) {
                    _live[i] = g.part(i).size();
                    if (_live[i] == 0)
                        ++_zeroed;
                }
            }

            /// Calls visit(transversal) at every leaf; visit returns false to
            /// stop. Returns false when stopped (by visit or by the budget).
            template <typename Visit>
            auto run(std::uint64_t budget, Visit && visit) -> bool
            {
                _budget = budget;
                if (_zeroed > 0)
                    return true;
                return descend(0, visit);
            }

            auto nodes() const -> std::uint64_t { return _nodes; }
            auto out_of_budget() const -> bool { return _out_of_budget; }

        private:
            template <typename Visit>
            auto descend(std::size_t depth, Visit & visit) -> bool
            {
                if (depth == _order.size())
                    return visit(_current);

                auto i = _order[depth];
                _assigned[i] = true;
                for (auto v : _g.part(i)) {
                    if (_blocked[v] > 0)
                        continue;
                    if (++_nodes > _budget) {
                        _out_of_budget = true;
                        _assigned[i] = false;
                        return false;
                    }
                    place(v);
                    _current.assign(i, v);
                    bool go_on = _zeroed > 0 || descend(depth + 1, visit);
                    _current.clear(i);
                    unplace(v);
                    if (! go_on) {
                        _assigned[i] = false;
                        return false;
                    }
                }
                _assigned[i] = false;
                return true;
            }

            auto last_free(EdgeId e) const -> VertexId
            {
                for (auto u : _g.edge(e))
                    if (! _chosen[u])
                        return u;
                return no_vertex;
            }

            auto place(VertexId v) -> void
            {
                _chosen[v] = true;
                for (auto e : _g.incident_edges(v))
                    if (++_edge_count[e] == _r - 1) {
                        auto u = last_free(e);
                        if (_blocked[u]++ == 0) {
                            auto j = _g.part_of(u);
                            if (! _assigned[j] && --_live[j] == 0)
                                ++_zeroed;
                        }
                    }
            }

            auto unplace(VertexId v) -> void
            {
                auto incident = _g.incident_edges(v);
                for (auto it = incident.rbegin(); it != incident.rend(); ++it) {
                    auto e = *it;
                    if (_edge_count[e]-- == _r - 1) {
                        auto u = last_free(e);
                        if (--_blocked[u] == 0) {
                            auto j = _g.part_of(u);
                            if (! _assigned[j] && _live[j]++ == 0)
                                --_zeroed;
                        }
                    }
                }
                _chosen[v] = false;
            }

            const Hypergraph & _g;
            std::size_t _r;
            std::vector<PartId> _order;
            std::vector<std::uint32_t> _edge_count;
            std::vector<std::uint32_t> _blocked;
            std::vector<bool> _chosen;
            std::vector<bool> _assigned;
            std::vector<std::size_t> _live;
            std::size_t _zeroed = 0;
            Transversal _current;
            std::uint64_t _nodes = 0;
            std::uint64_t _budget = 0;
            bool _out_of_budget = false;
        };
    }

    auto to_string(ExactStatus status) -> std::string_view
    {
        switch (status) {
            case ExactStatus::found: return "found";
            case ExactStatus::none: return "none";
            case ExactStatus::budget_exhausted: return "budget-exhausted";
        }
        return "unknown";
    }

    auto exact_find(const Hypergraph & g, std::uint64_t budget) -> ExactResult
    {
        Search search(g);
        ExactResult result;
        search.run(budget, [&](const Transversal & t) {
            result.transversal = t;
            return false;
        });
        result.nodes = std::min(search.nodes(), budget);
        if (result.transversal)
            result.status = ExactStatus::found;
        else if (search.out_of_budget())
            result.status = ExactStatus::budget_exhausted;
        else
            result.status = ExactStatus::none;
        return result;
    }

    auto count_transversals(const Hypergraph & g, std::uint64_t cap) -> TransversalCount
    {
        Search search(g);
        TransversalCount result;
        if (cap == 0) {
            result.saturated = true;
            return result;
        }
        search.run(std::numeric_limits<std::uint64_t>::max(), [&](const Transversal &) {
            return ++result.count < cap;
        });
        result.saturated = result.count >= cap;
        result.nodes = search.nodes();
        return result;
    }
}
