#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace bosonkit {

using integer = boost::multiprecision::mpz_int;
using rational = boost::multiprecision::mpq_rational;

inline integer factorial(std::uint64_t n)
{
    integer out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

inline integer binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    integer out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

// n (n-1) ... (n-k+1)
inline integer falling_factorial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    integer out = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= n - i;
    }
    return out;
}

template <class T>
T int_pow(T base, std::uint64_t exp)
{
    T out(1);
    while (exp != 0) {
        if (exp & 1U) {
            out *= base;
        }
        exp >>= 1U;
        if (exp != 0) {
            base *= base;
        }
    }
    return out;
}

inline bool is_integral(const rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

inline integer floor_div(const integer& a, const integer& b)
{
    integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// Nearest integer, ties away from zero.
inline integer round_nearest(const rational& q)
{
    const integer num = boost::multiprecision::numerator(q);
    const integer den = boost::multiprecision::denominator(q);
    if (num >= 0) {
        return (2 * num + den) / (2 * den);
    }
    return -((-2 * num + den) / (2 * den));
}

inline double to_double(const rational& q)
{
    return q.convert_to<double>();
}

inline std::string to_decimal(const integer& v)
{
    return v.str();
}

} // namespace bosonkit
