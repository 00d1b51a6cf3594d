#pragma once

#include <itlab/hypergraph.hpp>
#include <itlab/random.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itlab
{
    inline constexpr double two_e = 2.0 * 2.718281828459045;

    struct NibbleConfig
    {
        double eps = 0.5;
        std::optional<double> p;               // default: default_activation_probability(D)
        std::optional<std::size_t> t_star;     // default: default_step_limit(eps, p)
        double completion_ratio = two_e;
        std::size_t step_retries = 25;         // resamples of a single step
        std::size_t global_retries = 200;      // resamples over the whole run
        bool enforce_bounds = true;            // a step violating S(t)/D(t) is resampled
        bool check_invariants = true;          // verify P1-P3 after every accepted step
        std::size_t exact_completion_parts = 20;
        std::uint64_t exact_completion_budget = 2'000'000;
        std::uint64_t seed = 0;
    };

    inline constexpr double min_activation_probability = 0.02;
    inline constexpr double max_activation_probability = 0.5;
    inline constexpr std::size_t max_step_limit = 10'000;

    /// max(1 / log^3 D, 0.02), and at most 0.5.
    auto default_activation_probability(double d) -> double;

    /// ceil(10 / (eps p)), at most 10^4.
    auto default_step_limit(double eps, double p) -> std::size_t;

    /// I(t), T(t) and the live sets V_i(t). Parts outside I(t) have an empty
    /// live set.
    struct NibbleState
    {
        std::vector<bool> active;
        std::size_t active_count = 0;
        Transversal partial;
        std::vector<std::vector<VertexId>> live;
        std::vector<bool> is_live;
        std::vector<std::uint32_t> degree;   // d_{G(t)}(v), 0 for dead vertices
        double s = 0;
        double d = 0;
        std::size_t step = 0;
    };

    /// I(0) = all parts, T(0) empty, V_i(0) = V_i.
    auto initial_state(const Hypergraph & g, double s0, double d0) -> NibbleState;

    /// Degree of every vertex in the live graph G(t); 0 for dead vertices.
    auto live_degrees(const Hypergraph & g, const NibbleState & state) -> std::vector<std::uint32_t>;

    /// Smallest live set over the active parts (0 when none is active).
    auto min_live_size(const NibbleState & state) -> std::size_t;

    /// Largest average live degree over the active parts.
    auto max_live_avg_degree(const NibbleState & state) -> double;

    /// The random part of one step.
    struct NibbleRound
    {
        std::vector<PartId> activated;       // J
        std::vector<VertexId> picks;         // T', one per activated part
        std::vector<PartId> completed;       // J-hat
        std::vector<bool> retained;          // per vertex: N(v) and T' disjoint and B_v = 1
        std::vector<double> p_v;             // 1 - d(v) p / S(t), clamped to [0, 1]
        std::vector<double> q_v;             // P[N(v) and T' disjoint]
        bool ratio_clamped = false;          // some p_v exceeded q_v
    };

    /// Activates each active part with probability p, picks a uniform live
    /// vertex in each activated part, and decides survival: v is retained
    /// iff it has no neighbour among the picks and a coin of probability
    /// p_v / q_v lands heads, so that P[v retained] = p_v exactly whenever
    /// p_v <= q_v (which holds while |V_j(t)| >= S(t)).
    auto draw_round(const Hypergraph & g, const NibbleState & state, double p, Rng & rng) -> NibbleRound;

    struct NibbleStepOutcome
    {
        bool accepted = false;
        std::string failure;
        NibbleState next;
        NibbleRound round;
    };

    /// One step: draw_round, then T(t+1) = T(t) + T-hat, I(t+1) = I(t) - J-hat,
    /// V_i(t+1) = retained vertices, and S, D advanced by
    ///     S(t+1) = (1 - p / (1 + 3 eps / 4)) S(t),  D(t+1) = (1 - p / (1 + eps / 4)) D(t).
    /// The step is rejected when an active part empties, when S(t+1) < 1, or,
    /// with enforce_bounds, when some active part has |V_i(t+1)| < S(t+1) or
    /// live average degree above D(t+1).
    auto nibble_step(const Hypergraph & g, const NibbleState & state, double eps, double p, bool enforce_bounds,
            std::uint64_t seed) -> NibbleStepOutcome;

    /// P1-P3: T(t) covers exactly the parts outside I(t) and is independent,
    /// every live vertex lies in its own active part and has no neighbour in
    /// T(t). Returns a description of the first violation.
    auto check_nibble_invariants(const Hypergraph & g, const NibbleState & state) -> std::optional<std::string>;

    struct NibbleStepRecord
    {
        std::size_t step = 0;
        std::size_t active_parts = 0;
        std::size_t transversal_size = 0;
        std::size_t min_size = 0;
        double max_avg_degree = 0;
        double s = 0;
        double d = 0;
        double size_retention = 1;     // mean |V_i(t+1)| / |V_i(t)| over parts still active
        double degree_retention = 1;   // mean d'(v) / d(v) over survivors with d(v) >= D(t) / 4
        std::size_t attempts = 1;
        bool size_bound_exceeded = false;     // min size < S(t)
        bool degree_bound_exceeded = false;   // max avg degree > D(t)
        bool ratio_clamped = false;
    };

    enum class NibbleStatus
    {
        success,
        failure,
    };

    struct NibbleResult
    {
        NibbleStatus status = NibbleStatus::failure;
        std::optional<Transversal> transversal;
        std::string failure;
        std::string completion;          // "lll", "exact", "empty" or ""
        std::size_t steps = 0;
        std::size_t resamples = 0;       // rejected steps
        std::size_t completion_resamples = 0;
        bool precondition_met = false;   // max_degree_trim was applicable
        double eps = 0;                  // accuracy used by the step recursions
        double p = 0;
        std::size_t t_star = 0;
        double completion_ratio = 0;
        std::optional<double> final_ratio;
        std::vector<NibbleStepRecord> trajectory;
    };

    /// Graphs only. Trims with max_degree_trim(eps) and runs the nibble on
    /// the trimmed graph with accuracy eps/2, S(0) = (1 + eps/2) D', D(0) = D'.
    /// When the trim precondition fails the run is best effort: no trim,
    /// S(0) = min |V_i| and D(0) = D. Completion is attempted whenever the measured ratio
    /// min |V_i(t)| / max average live degree reaches completion_ratio
    /// (lll_sample with 50|E| rounds) or at most exact_completion_parts parts
    /// are active (exact_find), and once more at t*. A returned transversal
    /// is always independent.
    ///
    /// Throws Error for r != 2.
    auto nibble_solve(const Hypergraph & g, const NibbleConfig & cfg) -> NibbleResult;
}
