#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace itlab
{
    /// Exact non-negative-denominator fraction. Always stored reduced.
    class Rational
    {
    public:
        constexpr Rational() = default;

        constexpr Rational(std::int64_t numerator, std::int64_t denominator = 1) :
            _num(numerator), _den(denominator)
        {
            normalise();
        }

        constexpr auto numerator() const -> std::int64_t { return _num; }
        constexpr auto denominator() const -> std::int64_t { return _den; }

        constexpr auto to_double() const -> double
        {
            return static_cast<double>(_num) / static_cast<double>(_den);
        }

        friend constexpr auto operator==(const Rational & a, const Rational & b) -> bool
        {
            return a._num == b._num && a._den == b._den;
        }

        friend constexpr auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
        {
            auto lhs = static_cast<__int128>(a._num) * b._den;
            auto rhs = static_cast<__int128>(b._num) * a._den;
            return lhs <=> rhs;
        }

        friend constexpr auto operator*(const Rational & a, const Rational & b) -> Rational
        {
            auto g1 = std::gcd(a._num, b._den);
            auto g2 = std::gcd(b._num, a._den);
            if (g1 == 0)
                g1 = 1;
            if (g2 == 0)
                g2 = 1;
            return Rational{(a._num / g1) * (b._num / g2), (a._den / g2) * (b._den / g1)};
        }

        auto to_string() const -> std::string
        {
            return _den == 1 ? std::to_string(_num) : std::to_string(_num) + "/" + std::to_string(_den);
        }

        friend auto operator<<(std::ostream & os, const Rational & r) -> std::ostream &
        {
            return os << r.to_string();
        }

    private:
        constexpr auto normalise() -> void
        {
            if (_den < 0) {
                _num = -_num;
                _den = -_den;
            }
            auto g = std::gcd(_num, _den);
            if (g > 1) {
                _num /= g;
                _den /= g;
            }
        }

        std::int64_t _num = 0;
        std::int64_t _den = 1;
    };
}
