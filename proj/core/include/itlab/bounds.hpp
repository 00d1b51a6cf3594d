#pragma once

#include <cstddef>
#include <optional>

#include <nlohmann/json.hpp>

namespace itlab
{
    /// log of k^n (1 - s/k^r)^C(n, r), the expected number of independent
    /// transversals of a uniformly random (n, k, r, s)-graph. -infinity when
    /// s = k^r and n >= r. Requires s <= k^r.
    auto first_moment(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> double;

    /// exp(first_moment), or +infinity when that overflows.
    auto first_moment_value(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> double;

    /// Smallest n with expected count < 1 (the log is concave in n and
    /// positive at n = 1, so there is a single crossing). Empty when s = 0.
    auto first_moment_upper(std::size_t k, std::size_t r, std::size_t s) -> std::optional<std::size_t>;

    /// Symmetric local lemma for the events "T contains one of the s edges of
    /// the r-set of parts P": each has probability s/k^r (the edges form a
    /// matching), and P depends on the C(n, r) - C(n - r, r) - 1 other r-sets
    /// meeting it. Returns true iff e (s/k^r) (C(n, r) - C(n - r, r)) <= 1.
    /// This dependency count is our own; it only fixes the constant.
    auto lll_condition_holds(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> bool;

    /// Largest n for which lll_condition_holds (r - 1 when even n = r fails).
    auto lll_threshold(std::size_t k, std::size_t r, std::size_t s) -> std::size_t;

    /// (r - 1)(k^r / s)^(1/(r-1)), printed for comparison only.
    auto conjectured_threshold(std::size_t k, std::size_t r, std::size_t s) -> double;

    struct BoundReport
    {
        std::size_t k = 0, r = 0, s = 0;
        std::size_t lll_lower = 0;
        std::optional<std::size_t> first_moment_upper;
        double conjectured = 0;
        std::size_t n = 0;                // point at which the next fields are evaluated
        double first_moment_log = 0;
        double first_moment_value = 0;
        bool lll_condition_ok = false;
    };

    /// Bounds for (k, r, s); the per-n fields use `n` or, when absent, the
    /// first-moment crossing (falling back to lll_lower).
    auto bound_report(std::size_t k, std::size_t r, std::size_t s, std::optional<std::size_t> n = {}) -> BoundReport;

    auto to_json(const BoundReport & b) -> nlohmann::json;
}
