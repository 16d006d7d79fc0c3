#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/monomial.hpp>
#include <bosonkit/numeric.hpp>

namespace bosonkit {

/// Row S_{r,s}(n, k), k = s..ns.
struct stirling_table {
    monomial_spec spec;
    std::map<std::uint32_t, integer> values;
};

/// B_{r,s}(n), the row sum of the Stirling table (1 for n = 0).
struct bell_value {
    monomial_spec spec;
    integer value;
};

/// S_{r,r}(n,k) = Σ_{p=0}^{k-r} (-1)^p [(k-p)!/(k-p-r)!]^n / ((k-p)! p!).
inline integer stirling_rr_closed(std::uint32_t r, std::uint32_t n, std::uint32_t k)
{
    if (r < 1 || n < 1 || k < r || static_cast<std::uint64_t>(k) > static_cast<std::uint64_t>(r) * n) {
        throw error(errc::out_of_range, "stirling_rr_closed needs 1 <= r <= k <= rn, n >= 1");
    }
    rational sum = 0;
    for (std::uint32_t p = 0; p <= k - r; ++p) {
        const std::uint32_t m = k - p;
        rational term(int_pow(falling_factorial(m, r), n), factorial(m) * factorial(p));
        if (p % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (!is_integral(sum) || sum < 0) {
        throw error(errc::non_integer_result, "alternating sum for S_{" + std::to_string(r) + "," +
                                                  std::to_string(r) + "}(" + std::to_string(n) +
                                                  "," + std::to_string(k) + ") = " + sum.str());
    }
    return boost::multiprecision::numerator(sum);
}

/// Unsigned Lah number n!/k! C(n-1, k-1) = S_{2,1}(n,k).
inline integer lah(std::uint32_t n, std::uint32_t k)
{
    if (k < 1 || k > n) {
        throw error(errc::out_of_range, "lah needs 1 <= k <= n");
    }
    return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

namespace detail {

inline void check_stirling_index(const monomial_spec& spec, std::uint32_t k)
{
    if (spec.n() < 1) {
        throw error(errc::out_of_range, "Stirling coefficients need n >= 1");
    }
    if (k < spec.s() || k > spec.n() * spec.s()) {
        throw error(errc::out_of_range, "k = " + std::to_string(k) + " outside [" +
                                            std::to_string(spec.s()) + ", " +
                                            std::to_string(spec.n() * spec.s()) + "]");
    }
}

inline bool has_closed_form(const monomial_spec& spec)
{
    return spec.r() == spec.s() || (spec.r() == 2 && spec.s() == 1);
}

} // namespace detail

/// Stirling row from the rewriting engine alone.
inline stirling_table stirling_row_oracle(const monomial_spec& spec)
{
    return stirling_table{spec, extract_stirling(monomial_power_normal_form(spec), spec)};
}

/// Stirling row, via a closed form where one is known ((r,r) and (2,1)),
/// otherwise via the rewriting engine.
inline stirling_table stirling_row(const monomial_spec& spec)
{
    if (spec.n() < 1) {
        throw error(errc::out_of_range, "Stirling coefficients need n >= 1");
    }
    if (!detail::has_closed_form(spec)) {
        return stirling_row_oracle(spec);
    }
    stirling_table out{spec, {}};
    for (std::uint32_t k = spec.s(); k <= spec.n() * spec.s(); ++k) {
        out.values.emplace(k, spec.r() == spec.s() ? stirling_rr_closed(spec.r(), spec.n(), k)
                                                   : lah(spec.n(), k));
    }
    return out;
}

inline integer stirling(const monomial_spec& spec, std::uint32_t k)
{
    detail::check_stirling_index(spec, k);
    if (spec.r() == spec.s()) {
        return stirling_rr_closed(spec.r(), spec.n(), k);
    }
    if (spec.r() == 2 && spec.s() == 1) {
        return lah(spec.n(), k);
    }
    return stirling_row_oracle(spec).values.at(k);
}

inline bell_value bell(const monomial_spec& spec)
{
    if (spec.n() == 0) {
        return bell_value{spec, integer(1)};
    }
    integer total = 0;
    for (const auto& [k, v] : stirling_row(spec).values) {
        total += v;
    }
    return bell_value{spec, total};
}

/// B_{r,s}(0..n_max) from a single pass of the rewriting engine.
inline std::vector<integer> bell_sequence(std::uint32_t r, std::uint32_t s, std::uint32_t n_max)
{
    const auto powers = monomial_power_sequence(monomial_spec(r, s, n_max));
    std::vector<integer> out;
    out.reserve(powers.size());
    for (const auto& nf : powers) {
        out.push_back(nf.coefficient_sum());
    }
    return out;
}

} // namespace bosonkit
