#include <itlab/error.hpp>
#include <itlab/exact.hpp>
#include <itlab/lll.hpp>
#include <itlab/nibble.hpp>
#include <itlab/trim.hpp>

#include <algorithm>
#include <limits>

namespace itlab
{
    namespace
    {
        constexpr std::uint64_t completion_stream = 1ULL << 40;

        /// G(t) restricted to the active parts, for the completion solvers.
        auto live_subgraph(const Hypergraph & g, const NibbleState & state) -> InducedSubgraph
        {
            return induced(g, state.is_live, state.active);
        }

        auto merge(const NibbleState & state, const InducedSubgraph & sub, const Transversal & t) -> Transversal
        {
            auto result = state.partial;
            auto lifted = lift(sub, t, state.partial.num_parts());
            for (PartId i = 0; i < lifted.num_parts(); ++i)
                if (auto v = lifted.at(i))
                    result.assign(i, *v);
            return result;
        }
    }

    auto default_activation_probability(double d) -> double
    {
        if (! (d > 1.0))
            return max_activation_probability;
        auto l = std::log(d);
        auto p = std::max(1.0 / (l * l * l), min_activation_probability);
        return std::min(p, max_activation_probability);
    }

    auto default_step_limit(double eps, double p) -> std::size_t
    {
        auto t = std::ceil(10.0 / (eps * p));
        if (! (t < static_cast<double>(max_step_limit)))
            return max_step_limit;
        return std::max<std::size_t>(1, static_cast<std::size_t>(t));
    }

    auto initial_state(const Hypergraph & g, double s0, double d0) -> NibbleState
    {
        NibbleState state;
        state.active.assign(g.num_parts(), true);
        state.active_count = g.num_parts();
        state.partial = Transversal(g.num_parts());
        state.live = g.parts();
        state.is_live.assign(g.num_vertices(), true);
        state.degree = live_degrees(g, state);
        state.s = s0;
        state.d = d0;
        return state;
    }

    auto live_degrees(const Hypergraph & g, const NibbleState & state) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> degrees(g.num_vertices(), 0);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (state.is_live[v])
                for (auto u : g.neighbours(v))
                    degrees[v] += state.is_live[u] ? 1 : 0;
        return degrees;
    }

    auto min_live_size(const NibbleState & state) -> std::size_t
    {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (PartId i = 0; i < state.active.size(); ++i)
            if (state.active[i])
                best = std::min(best, state.live[i].size());
        return state.active_count == 0 ? 0 : best;
    }

    auto max_live_avg_degree(const NibbleState & state) -> double
    {
        double best = 0;
        for (PartId i = 0; i < state.active.size(); ++i) {
            if (! state.active[i] || state.live[i].empty())
                continue;
            std::size_t sum = 0;
            for (auto v : state.live[i])
                sum += state.degree[v];
            best = std::max(best, static_cast<double>(sum) / static_cast<double>(state.live[i].size()));
        }
        return best;
    }

    auto draw_round(const Hypergraph & g, const NibbleState & state, double p, Rng & rng) -> NibbleRound
    {
        NibbleRound round;
        std::vector<bool> in_t_prime(g.num_vertices(), false);
        for (PartId i = 0; i < g.num_parts(); ++i) {
            if (! state.active[i] || ! rng.bernoulli(p))
                continue;
            const auto & live = state.live[i];
            if (live.empty())
                continue;
            auto v = live[rng.uniform_index(live.size())];
            round.activated.push_back(i);
            round.picks.push_back(v);
            in_t_prime[v] = true;
        }

        for (std::size_t a = 0; a < round.picks.size(); ++a) {
            auto v = round.picks[a];
            bool isolated = std::none_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                    [&](VertexId u) { return in_t_prime[u]; });
            if (isolated)
                round.completed.push_back(round.activated[a]);
        }

        round.retained.assign(g.num_vertices(), false);
        round.p_v.assign(g.num_vertices(), 0.0);
        round.q_v.assign(g.num_vertices(), 0.0);
        std::vector<std::uint32_t> per_part(g.num_parts(), 0);
        std::vector<PartId> touched;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (! state.is_live[v])
                continue;
            bool hit = false;
            touched.clear();
            for (auto u : g.neighbours(v)) {
                if (! state.is_live[u])
                    continue;
                hit = hit || in_t_prime[u];
                auto j = g.part_of(u);
                if (per_part[j]++ == 0)
                    touched.push_back(j);
            }
            double q = 1.0;
            for (auto j : touched) {
                q *= 1.0 - p * static_cast<double>(per_part[j]) / static_cast<double>(state.live[j].size());
                per_part[j] = 0;
            }
            auto pv = std::clamp(1.0 - static_cast<double>(state.degree[v]) * p / state.s, 0.0, 1.0);
            round.p_v[v] = pv;
            round.q_v[v] = q;
            double coin = 1.0;
            if (q > 0.0)
                coin = pv / q;
            if (coin > 1.0) {
                round.ratio_clamped = true;
                coin = 1.0;
            }
            bool b = rng.bernoulli(coin);
            round.retained[v] = ! hit && b;
        }
        return round;
    }

    auto nibble_step(const Hypergraph & g, const NibbleState & state, double eps, double p, bool enforce_bounds,
            std::uint64_t seed) -> NibbleStepOutcome
    {
        Rng rng(seed);
        NibbleStepOutcome out;
        out.round = draw_round(g, state, p, rng);
        const auto & round = out.round;

        auto next = state;
        ++next.step;
        next.s = (1.0 - p / (1.0 + 3.0 * eps / 4.0)) * state.s;
        next.d = (1.0 - p / (1.0 + eps / 4.0)) * state.d;

        for (auto i : round.completed) {
            auto pick = std::find(round.activated.begin(), round.activated.end(), i) - round.activated.begin();
            auto v = round.picks[static_cast<std::size_t>(pick)];
            for (auto u : g.neighbours(v))
                if (next.partial.is_assigned(g.part_of(u)) && next.partial.chosen()[g.part_of(u)] == u)
                    throw Error("nibble: T-hat is not independent of T(t)");
            next.partial.assign(i, v);
            next.active[i] = false;
            --next.active_count;
        }
        for (std::size_t a = 0; a < round.completed.size(); ++a)
            for (std::size_t b = a + 1; b < round.completed.size(); ++b) {
                auto u = next.partial.chosen()[round.completed[a]];
                auto v = next.partial.chosen()[round.completed[b]];
                auto nb = g.neighbours(u);
                if (std::binary_search(nb.begin(), nb.end(), v))
                    throw Error("nibble: T-hat is not independent");
            }

        for (PartId i = 0; i < g.num_parts(); ++i) {
            if (! state.active[i])
                continue;
            auto & live = next.live[i];
            if (! next.active[i]) {
                for (auto v : live)
                    next.is_live[v] = false;
                live.clear();
                continue;
            }
            std::vector<VertexId> kept;
            for (auto v : live) {
                if (round.retained[v])
                    kept.push_back(v);
                else
                    next.is_live[v] = false;
            }
            live = std::move(kept);
        }

        next.degree = live_degrees(g, next);
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (next.active[i] && next.live[i].empty()) {
                out.failure = "part " + std::to_string(i) + " emptied";
                out.next = std::move(next);
                return out;
            }
        if (next.active_count > 0 && next.s < 1.0) {
            out.failure = "S(t) dropped below 1";
            out.next = std::move(next);
            return out;
        }
        if (enforce_bounds && next.active_count > 0) {
            for (PartId i = 0; i < g.num_parts(); ++i) {
                if (! next.active[i])
                    continue;
                if (static_cast<double>(next.live[i].size()) < next.s) {
                    out.failure = "part " + std::to_string(i) + " below S(t+1)";
                    out.next = std::move(next);
                    return out;
                }
                std::size_t sum = 0;
                for (auto v : next.live[i])
                    sum += next.degree[v];
                if (static_cast<double>(sum) > next.d * static_cast<double>(next.live[i].size())) {
                    out.failure = "part " + std::to_string(i) + " average degree above D(t+1)";
                    out.next = std::move(next);
                    return out;
                }
            }
        }
        out.accepted = true;
        out.next = std::move(next);
        return out;
    }

    auto check_nibble_invariants(const Hypergraph & g, const NibbleState & state) -> std::optional<std::string>
    {
        std::vector<bool> in_t(g.num_vertices(), false);
        std::size_t active = 0;
        for (PartId i = 0; i < g.num_parts(); ++i) {
            if (state.active[i]) {
                ++active;
                if (state.partial.is_assigned(i))
                    return "P2: active part " + std::to_string(i) + " already has a transversal vertex";
                for (auto v : state.live[i])
                    if (g.part_of(v) != i || ! state.is_live[v])
                        return "P3: live set of part " + std::to_string(i) + " is inconsistent";
            }
            else {
                auto v = state.partial.at(i);
                if (! v || g.part_of(*v) != i)
                    return "P2: inactive part " + std::to_string(i) + " is not covered by T(t)";
                in_t[*v] = true;
                if (! state.live[i].empty())
                    return "P3: inactive part " + std::to_string(i) + " still has live vertices";
            }
        }
        if (active != state.active_count)
            return "P1: active count mismatch";
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto ev = g.edge(e);
            if (in_t[ev[0]] && in_t[ev[1]])
                return "P2: T(t) contains an edge";
            if ((in_t[ev[0]] && state.is_live[ev[1]]) || (in_t[ev[1]] && state.is_live[ev[0]]))
                return "P3: a live vertex is adjacent to T(t)";
        }
        std::size_t live_total = 0;
        for (PartId i = 0; i < g.num_parts(); ++i)
            live_total += state.live[i].size();
        if (live_total != static_cast<std::size_t>(std::count(state.is_live.begin(), state.is_live.end(), true)))
            return "P3: live flags disagree with live sets";
        if (state.degree != live_degrees(g, state))
            return "P3: cached live degrees are stale";
        return std::nullopt;
    }

    namespace
    {
        auto record_of(const NibbleState & state) -> NibbleStepRecord
        {
            NibbleStepRecord rec;
            rec.step = state.step;
            rec.active_parts = state.active_count;
            rec.transversal_size = state.partial.assigned_count();
            rec.min_size = min_live_size(state);
            rec.max_avg_degree = max_live_avg_degree(state);
            rec.s = state.s;
            rec.d = state.d;
            rec.size_bound_exceeded = state.active_count > 0 && static_cast<double>(rec.min_size) < state.s;
            rec.degree_bound_exceeded = rec.max_avg_degree > state.d;
            return rec;
        }

        auto retention(const Hypergraph & g, const NibbleState & before, const NibbleState & after,
                NibbleStepRecord & rec) -> void
        {
            double size_sum = 0;
            std::size_t size_count = 0;
            for (PartId i = 0; i < g.num_parts(); ++i)
                if (after.active[i] && ! before.live[i].empty()) {
                    size_sum += static_cast<double>(after.live[i].size()) / static_cast<double>(before.live[i].size());
                    ++size_count;
                }
            rec.size_retention = size_count ? size_sum / static_cast<double>(size_count) : 1.0;

            const auto & d_before = before.degree;
            const auto & d_after = after.degree;
            double deg_sum = 0;
            std::size_t deg_count = 0;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                if (after.is_live[v] && d_before[v] > 0 && static_cast<double>(d_before[v]) >= before.d / 4.0) {
                    deg_sum += static_cast<double>(d_after[v]) / static_cast<double>(d_before[v]);
                    ++deg_count;
                }
            rec.degree_retention = deg_count ? deg_sum / static_cast<double>(deg_count) : 1.0;
        }

        struct Completion
        {
            std::optional<Transversal> transversal;
            std::string method;
            std::size_t resamples = 0;
            bool dead_end = false;   // the live instance provably has no IT
        };

        auto complete(const Hypergraph & g, const NibbleState & state, const NibbleConfig & cfg, bool ratio_ok,
                std::uint64_t seed) -> Completion
        {
            Completion c;
            if (state.active_count == 0) {
                c.transversal = state.partial;
                c.method = "empty";
                return c;
            }
            auto sub = live_subgraph(g, state);
            if (ratio_ok) {
                auto lll = lll_sample(sub.graph, default_lll_rounds(sub.graph), seed);
                c.resamples = lll.resamples;
                if (lll.success) {
                    c.transversal = merge(state, sub, lll.transversal);
                    c.method = "lll";
                    return c;
                }
            }
            if (state.active_count <= cfg.exact_completion_parts) {
                auto exact = exact_find(sub.graph, cfg.exact_completion_budget);
                if (exact.status == ExactStatus::found) {
                    c.transversal = merge(state, sub, *exact.transversal);
                    c.method = "exact";
                }
                c.dead_end = exact.status == ExactStatus::none;
            }
            return c;
        }
    }

    auto nibble_solve(const Hypergraph & g, const NibbleConfig & cfg) -> NibbleResult
    {
        if (g.uniformity() != 2)
            throw Error("nibble_solve works on graphs only (r = 2)");
        if (! (cfg.eps > 0.0))
            throw Error("nibble_solve: eps must be positive");

        NibbleResult result;
        result.completion_ratio = cfg.completion_ratio;
        for (PartId i = 0; i < g.num_parts(); ++i)
            if (g.part(i).empty()) {
                result.failure = "part " + std::to_string(i) + " is empty";
                return result;
            }

        std::optional<TrimResult> trim;
        try {
            trim = max_degree_trim(g, cfg.eps);
        }
        catch (const Error &) {
            trim.reset();
        }

        const Hypergraph * work = &g;
        double s0 = 0;
        double d0 = 0;
        if (trim) {
            result.precondition_met = true;
            result.eps = cfg.eps / 2.0;
            work = &trim->sub.graph;
            d0 = trim->d_prime;
            s0 = (1.0 + result.eps) * d0;
        }
        else {
            result.eps = cfg.eps;
            d0 = max_avg_degree(g);
            s0 = static_cast<double>(min_part_size(g));
        }
        result.p = cfg.p ? *cfg.p : default_activation_probability(d0);
        if (! (result.p >= 0.0 && result.p <= 1.0))
            throw Error("nibble_solve: p must lie in [0, 1]");
        result.t_star = cfg.t_star ? *cfg.t_star : default_step_limit(result.eps, std::max(result.p, 1e-12));

        auto finish = [&](const NibbleState & state, Transversal local, std::string method) {
            Transversal full = local;
            if (trim)
                full = lift(trim->sub, local, g.num_parts());
            if (! is_independent_transversal(g, full))
                throw Error("nibble_solve: completed transversal failed validation");
            result.status = NibbleStatus::success;
            result.transversal = std::move(full);
            result.completion = std::move(method);
            result.steps = state.step;
        };

        auto state = initial_state(*work, s0, d0);
        result.trajectory.push_back(record_of(state));

        while (true) {
            const auto & rec = result.trajectory.back();
            auto ratio = rec.max_avg_degree > 0 ? static_cast<double>(rec.min_size) / rec.max_avg_degree
                                                : std::numeric_limits<double>::infinity();
            result.final_ratio = ratio;
            bool ratio_ok = ratio >= cfg.completion_ratio;
            bool at_limit = state.step >= result.t_star;
            if (ratio_ok || state.active_count <= cfg.exact_completion_parts || at_limit) {
                auto c = complete(*work, state, cfg, ratio_ok, derive_seed(cfg.seed, completion_stream + state.step));
                result.completion_resamples += c.resamples;
                if (c.transversal) {
                    finish(state, std::move(*c.transversal), c.method);
                    return result;
                }
                if (c.dead_end) {
                    result.failure = "live instance at step " + std::to_string(state.step) + " has no independent transversal";
                    result.steps = state.step;
                    return result;
                }
            }
            if (at_limit) {
                result.failure = "step limit t*=" + std::to_string(result.t_star) + " reached without completion";
                result.steps = state.step;
                return result;
            }

            std::optional<NibbleStepOutcome> accepted;
            std::size_t attempts = 0;
            std::string last_failure;
            while (attempts < cfg.step_retries && result.resamples <= cfg.global_retries) {
                auto seed = derive_seed(derive_seed(cfg.seed, state.step), attempts);
                ++attempts;
                auto out = nibble_step(*work, state, result.eps, result.p, cfg.enforce_bounds, seed);
                if (out.accepted) {
                    accepted = std::move(out);
                    break;
                }
                last_failure = out.failure;
                ++result.resamples;
            }
            if (! accepted) {
                result.failure = "step " + std::to_string(state.step) + " failed after " + std::to_string(attempts)
                    + " attempts (" + last_failure + ")";
                result.steps = state.step;
                return result;
            }
            if (cfg.check_invariants)
                if (auto violation = check_nibble_invariants(*work, accepted->next))
                    throw Error("nibble invariant violated at step " + std::to_string(accepted->next.step) + ": " + *violation);

            auto next_rec = record_of(accepted->next);
            next_rec.attempts = attempts;
            next_rec.ratio_clamped = accepted->round.ratio_clamped;
            retention(*work, state, accepted->next, next_rec);
            state = std::move(accepted->next);
            result.trajectory.push_back(next_rec);
        }
    }
}
