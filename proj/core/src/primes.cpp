#include <itlab/error.hpp>
#include <itlab/primes.hpp>

#include <numeric>
#include <string>

namespace itlab
{
    namespace
    {
        auto mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t
        {
            return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
        }

        auto pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) -> std::uint64_t
        {
            std::uint64_t result = 1 % m;
            base %= m;
            while (exp > 0) {
                if (exp & 1)
                    result = mul_mod(result, base, m);
                base = mul_mod(base, base, m);
                exp >>= 1;
            }
            return result;
        }
    }

    auto is_prime(std::uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
            if (n % p == 0)
                return n == p;
        }
        auto d = n - 1;
        unsigned s = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++s;
        }
        // These twelve bases are a deterministic witness set below 3.3e24.
        for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
            auto x = pow_mod(a, d, n);
            if (x == 1 || x == n - 1)
                continue;
            bool composite = true;
            for (unsigned i = 1; i < s; ++i) {
                x = mul_mod(x, x, n);
                if (x == n - 1) {
                    composite = false;
                    break;
                }
            }
            if (composite)
                return false;
        }
        return true;
    }

    auto find_prime_in_ap(std::uint64_t x, std::uint64_t a, std::uint64_t q, std::uint64_t cap) -> std::uint64_t
    {
        if (q == 0)
            throw Error("prime search: modulus must be positive");
        if (x < 2)
            throw Error("prime search: x must be at least 2");
        if (std::gcd(a % q, q) != 1 && q != 1)
            throw Error("prime search: gcd(a, q) must be 1 (a=" + std::to_string(a) + ", q=" + std::to_string(q) + ")");

        auto residue = a % q;
        auto candidate = x + (residue + q - x % q) % q;
        for (std::uint64_t tried = 0; tried < cap; ++tried, candidate += q)
            if (is_prime(candidate))
                return candidate;
        throw Error("prime search: no prime = " + std::to_string(a) + " mod " + std::to_string(q) + " among " + std::to_string(cap) + " candidates from " + std::to_string(x));
    }
}
