#include <itlab/bounds.hpp>
#include <itlab/census.hpp>
#include <itlab/error.hpp>

#include <cmath>
#include <limits>

namespace itlab
{
    namespace
    {
        constexpr double tolerance = 1e-12;

        auto validate(std::size_t k, std::size_t r, std::size_t s) -> double
        {
            if (k < 1 || r < 2)
                throw Error("bounds: need k >= 1 and r >= 2");
            auto kr = std::pow(static_cast<double>(k), static_cast<double>(r));
            if (static_cast<double>(s) > kr)
                throw Error("bounds: s exceeds k^r");
            return static_cast<double>(s) / kr;
        }
    }

    auto first_moment(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> double
    {
        auto x = validate(k, r, s);
        auto base = static_cast<double>(n) * std::log(static_cast<double>(k));
        auto sets = binomial(n, r);
        if (s == 0 || sets == 0.0)
            return base;
        if (x >= 1.0)
            return -std::numeric_limits<double>::infinity();
        return base + sets * std::log1p(-x);
    }

    auto first_moment_value(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> double
    {
        return std::exp(first_moment(n, k, r, s));
    }

    auto first_moment_upper(std::size_t k, std::size_t r, std::size_t s) -> std::optional<std::size_t>
    {
        validate(k, r, s);
        if (s == 0)
            return std::nullopt;
        auto negative = [&](std::size_t n) { return first_moment(n, k, r, s) < -tolerance; };
        std::size_t hi = 1;
        while (! negative(hi))
            hi *= 2;
        std::size_t lo = hi / 2;   // not negative (or 0)
        while (hi - lo > 1) {
            auto mid = lo + (hi - lo) / 2;
            (negative(mid) ? hi : lo) = mid;
        }
        return hi;
    }

    auto lll_condition_holds(std::size_t n, std::size_t k, std::size_t r, std::size_t s) -> bool
    {
        auto x = validate(k, r, s);
        if (n < r)
            return true;
        auto meeting = binomial(n, r) - (n >= 2 * r ? binomial(n - r, r) : 0.0);
        return std::exp(1.0) * x * meeting <= 1.0 + tolerance;
    }

    auto lll_threshold(std::size_t k, std::size_t r, std::size_t s) -> std::size_t
    {
        validate(k, r, s);
        if (s == 0)
            throw Error("lll_threshold: unbounded for s = 0");
        if (! lll_condition_holds(r, k, r, s))
            return r - 1;
        std::size_t lo = r;
        std::size_t hi = 2 * r;
        while (lll_condition_holds(hi, k, r, s)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            auto mid = lo + (hi - lo) / 2;
            (lll_condition_holds(mid, k, r, s) ? lo : hi) = mid;
        }
        return lo;
    }

    auto conjectured_threshold(std::size_t k, std::size_t r, std::size_t s) -> double
    {
        validate(k, r, s);
        auto rd = static_cast<double>(r);
        return (rd - 1.0) * std::pow(std::pow(static_cast<double>(k), rd) / static_cast<double>(s), 1.0 / (rd - 1.0));
    }

    auto bound_report(std::size_t k, std::size_t r, std::size_t s, std::optional<std::size_t> n) -> BoundReport
    {
        BoundReport b;
        b.k = k;
        b.r = r;
        b.s = s;
        b.lll_lower = s == 0 ? 0 : lll_threshold(k, r, s);
        b.first_moment_upper = first_moment_upper(k, r, s);
        b.conjectured = s == 0 ? std::numeric_limits<double>::infinity() : conjectured_threshold(k, r, s);
        b.n = n ? *n : (b.first_moment_upper ? *b.first_moment_upper : b.lll_lower);
        b.first_moment_log = first_moment(b.n, k, r, s);
        b.first_moment_value = first_moment_value(b.n, k, r, s);
        b.lll_condition_ok = lll_condition_holds(b.n, k, r, s);
        return b;
    }

    auto to_json(const BoundReport & b) -> nlohmann::json
    {
        auto finite = [](double x) -> nlohmann::json {
            if (std::isfinite(x))
                return x;
            return x > 0 ? "inf" : "-inf";
        };
        return nlohmann::json{
            {"k", b.k}, {"r", b.r}, {"s", b.s},
            {"lll_lower", b.lll_lower},
            {"first_moment_upper", b.first_moment_upper ? nlohmann::json(*b.first_moment_upper) : nlohmann::json(nullptr)},
            {"conjectured", finite(b.conjectured)},
            {"n", b.n},
            {"first_moment_log", finite(b.first_moment_log)},
            {"first_moment_value", finite(b.first_moment_value)},
            {"lll_condition_ok", b.lll_condition_ok},
        };
    }
}
