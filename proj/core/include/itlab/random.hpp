#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace itlab
{
    /// splitmix64 finaliser. Used both to expand seeds and to derive
    /// per-trial / per-retry seeds.
    constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Child seed for stream `index` of `master`:
    ///     derive_seed(m, i) = splitmix64(m ^ splitmix64(i + 1))
    /// Distinct indices give statistically independent streams, and the
    /// mapping depends only on (m, i), so trials can run in any order.
    constexpr auto derive_seed(std::uint64_t master, std::uint64_t index) -> std::uint64_t
    {
        return splitmix64(master ^ splitmix64(index + 1));
    }

    /// The single source of randomness handed to every randomized routine.
    ///
    /// Wraps std::mt19937_64, whose output sequence is fixed by the standard,
    /// and implements its own bounded-integer and real conversions so results
    /// are bit-identical across standard libraries (the std distributions
    /// are implementation-defined).
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(splitmix64(seed)) {}

        auto next_u64() -> std::uint64_t { return _engine(); }

        /// Uniform integer in [0, bound). bound must be positive.
        auto uniform_index(std::uint64_t bound) -> std::uint64_t
        {
            // Lemire's multiply-shift with rejection.
            auto x = next_u64();
            auto m = static_cast<unsigned __int128>(x) * bound;
            auto low = static_cast<std::uint64_t>(m);
            if (low < bound) {
                std::uint64_t threshold = (0 - bound) % bound;
                while (low < threshold) {
                    x = next_u64();
                    m = static_cast<unsigned __int128>(x) * bound;
                    low = static_cast<std::uint64_t>(m);
                }
            }
            return static_cast<std::uint64_t>(m >> 64);
        }

        /// Uniform double in [0, 1) with 53 random bits.
        auto uniform01() -> double
        {
            return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        }

        auto bernoulli(double p) -> bool
        {
            if (p <= 0.0)
                return false;
            if (p >= 1.0)
                return true;
            return uniform01() < p;
        }

        /// Moves a uniformly random `count`-element subset into the prefix of
        /// `items`, in uniformly random order (Fisher-Yates prefix).
        template <typename T>
        auto shuffle_prefix(std::span<T> items, std::size_t count) -> void
        {
            for (std::size_t i = 0; i < count && i < items.size(); ++i) {
                auto j = i + uniform_index(items.size() - i);
                std::swap(items[i], items[j]);
            }
        }

    private:
        std::mt19937_64 _engine;
    };
}
