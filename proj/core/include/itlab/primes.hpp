#pragma once

#include <cstdint>

namespace itlab
{
    /// Deterministic Miller-Rabin for all 64-bit inputs.
    auto is_prime(std::uint64_t n) -> bool;

    inline constexpr std::uint64_t default_prime_search_cap = 10'000'000;

    /// Smallest prime p >= x with p = a (mod q), by direct search.
    /// Throws Error when gcd(a, q) != 1, x < 2, q == 0, or no prime is found
    /// among the first `cap` candidates.
    auto find_prime_in_ap(std::uint64_t x, std::uint64_t a, std::uint64_t q,
            std::uint64_t cap = default_prime_search_cap) -> std::uint64_t;
}
