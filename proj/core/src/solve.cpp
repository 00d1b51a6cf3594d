#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/greedy.hpp>
#include <itlab/io.hpp>
#include <itlab/kt_free.hpp>
#include <itlab/lll.hpp>
#include <itlab/nibble.hpp>
#include <itlab/solve.hpp>
#include <itlab/trajectory.hpp>

namespace itlab
{
    auto to_string(SolverKind kind) -> std::string_view
    {
        switch (kind) {
            case SolverKind::exact: return "exact";
            case SolverKind::greedy: return "greedy";
            case SolverKind::lll: return "lll";
            case SolverKind::nibble: return "nibble";
            case SolverKind::ktfree: return "ktfree";
        }
        return "unknown";
    }

    auto parse_solver(std::string_view name) -> SolverKind
    {
        for (auto kind : {SolverKind::exact, SolverKind::greedy, SolverKind::lll, SolverKind::nibble, SolverKind::ktfree})
            if (to_string(kind) == name)
                return kind;
        throw Error("unknown solver '" + std::string(name) + "' (expected exact, greedy, lll, nibble or ktfree)");
    }

    namespace
    {
        auto nibble_config(const SolveOptions & o) -> NibbleConfig
        {
            NibbleConfig cfg;
            cfg.eps = o.eps;
            cfg.p = o.p;
            cfg.t_star = o.max_steps;
            cfg.seed = o.seed;
            return cfg;
        }

        auto set_found(SolveOutcome & out, std::optional<Transversal> t, const Hypergraph & g) -> void
        {
            if (t) {
                if (! is_independent_transversal(g, *t))
                    throw Error("solver returned an invalid transversal");
                out.status = "found";
                out.transversal = std::move(t);
            }
        }
    }

    auto solve(const Hypergraph & g, const SolveOptions & o) -> SolveOutcome
    {
        SolveOutcome out;
        out.status = "failure";
        switch (o.solver) {
            case SolverKind::exact: {
                auto r = exact_find(g, o.budget ? *o.budget : default_exact_budget);
                out.steps = r.nodes;
                out.status = std::string(to_string(r.status));
                set_found(out, r.transversal, g);
                break;
            }
            case SolverKind::greedy: {
                auto r = greedy_find(g);
                set_found(out, r.transversal, g);
                if (r.stuck_part)
                    out.details["stuck_part"] = *r.stuck_part;
                break;
            }
            case SolverKind::lll: {
                auto rounds = o.budget ? static_cast<std::size_t>(*o.budget) : default_lll_rounds(g);
                auto r = lll_sample(g, rounds, o.seed);
                out.resamples = r.resamples;
                out.details["max_rounds"] = rounds;
                if (r.success)
                    set_found(out, r.transversal, g);
                break;
            }
            case SolverKind::nibble: {
                auto r = nibble_solve(g, nibble_config(o));
                out.steps = r.steps;
                out.resamples = r.resamples;
                for (const auto & rec : r.trajectory)
                    out.trajectory.push_back(to_json(rec));
                set_found(out, r.transversal, g);
                out.details = {
                    {"completion", r.completion},
                    {"failure", r.failure},
                    {"precondition_met", r.precondition_met},
                    {"eps", r.eps},
                    {"p", r.p},
                    {"t_star", r.t_star},
                    {"completion_resamples", r.completion_resamples},
                    {"diagnostics", to_json(trajectory_report(r))},
                };
                break;
            }
            case SolverKind::ktfree: {
                KtFreeConfig cfg;
                cfg.nibble = nibble_config(o);
                cfg.seed = o.seed;
                auto r = kt_free_transversal(g, o.t, cfg);
                out.steps = r.inner_steps;
                out.resamples = r.inner_resamples;
                out.details = {
                    {"t", o.t},
                    {"colouring_moves", r.colouring.moves},
                    {"monochromatic_edges", r.colouring.monochromatic_edges},
                    {"failure", r.failure},
                };
                if (r.transversal) {
                    out.status = "found";
                    out.transversal = std::move(r.transversal);
                }
                break;
            }
        }
        return out;
    }

    auto to_json(const SolveOutcome & o) -> nlohmann::json
    {
        return nlohmann::json{
            {"status", o.status},
            {"transversal", o.transversal ? transversal_to_json(*o.transversal) : nlohmann::json(nullptr)},
            {"steps", o.steps},
            {"trajectory", o.trajectory},
            {"resamples", o.resamples},
            {"details", o.details},
        };
    }
}
