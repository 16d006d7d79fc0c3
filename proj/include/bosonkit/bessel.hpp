#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/error_bounded_real.hpp>
#include <bosonkit/numeric.hpp>
#include <bosonkit/series.hpp>

namespace bosonkit {

/// I_nu(y) from its power series Σ_m (y/2)^(2m+nu) / (m! (m+nu)!), summed in
/// exact rational arithmetic. y is taken as the exact rational it represents.
inline error_bounded_real bessel_i(std::uint32_t nu, const rational& y, const rational& target_error,
                                   unsigned bits = 256, unsigned max_bits = 4096)
{
    if (y < 0) {
        throw error(errc::domain, "bessel_i needs y >= 0");
    }
    if (target_error <= 0) {
        throw error(errc::domain, "target error must be positive");
    }
    const rational half_y = y / 2;
    const rational q = half_y * half_y;
    // t_{m+1}/t_m = q / ((m+1)(m+1+nu)), non-increasing in m.
    struct state {
        std::uint64_t index = 0;
        rational term;
    };
    auto st = std::make_shared<state>(state{0, int_pow(half_y, nu) / factorial(nu)});
    const rational start = st->term;
    term_function term = [st, q, nu, start](std::uint64_t m) {
        if (m < st->index) {
            st->index = 0;
            st->term = start;
        }
        while (st->index < m) {
            ++st->index;
            st->term *= q / (st->index * (st->index + nu));
        }
        return st->term;
    };
    const partial_sum_result partial = sum_to_tolerance(term, target_error / 2);
    const rational exact = partial.sum;
    for (unsigned b = std::max(bits, 1U); b <= max_bits; b *= 2) {
        const rational rounded = round_to_bits(exact, b);
        const rational err = abs(rounded - exact) + *partial.tail_bound;
        if (err <= target_error) {
            return error_bounded_real(rounded, err, b);
        }
    }
    throw error(errc::precision_exhausted, "bessel_i target error not reached");
}

inline error_bounded_real bessel_i(std::uint32_t nu, double y, double target_error, unsigned bits = 256)
{
    if (!(y >= 0) || !std::isfinite(y)) {
        throw error(errc::domain, "bessel_i needs finite y >= 0");
    }
    return bessel_i(nu, rational(y), rational(target_error), bits);
}

/// log Σ_m u^(2m+lead) / (m! (m+nu)!) in double precision, for u > 0, with a
/// bound on the relative truncation error of the sum.
struct log_series_value {
    double log_value = -std::numeric_limits<double>::infinity();
    double relative_truncation = 0;
    std::size_t terms = 0;
};

inline log_series_value log_bessel_sum(double u, std::uint32_t nu, int lead)
{
    if (!(u > 0)) {
        throw error(errc::domain, "log_bessel_sum needs u > 0");
    }
    const double log_u = std::log(u);
    const double log_q = 2 * log_u;
    std::vector<double> logs;
    double log_t = lead * log_u - std::lgamma(nu + 1.0);
    double max_log = log_t;
    log_series_value out;
    constexpr double negligible = -45.0; // e^-45 ~ 3e-20, below double resolution
    for (std::uint64_t m = 0;; ++m) {
        logs.push_back(log_t);
        max_log = std::max(max_log, log_t);
        const double log_ratio = log_q - std::log((m + 1.0) * (m + 1.0 + nu));
        const double next = log_t + log_ratio;
        if (log_ratio < -std::log(2.0) && next - max_log < negligible) {
            // Ratios only shrink from here, so the omitted terms sum to at most 2 * next.
            out.relative_truncation = 2 * std::exp(next - max_log);
            break;
        }
        log_t = next;
    }
    double scaled = 0;
    for (double l : logs) {
        scaled += std::exp(l - max_log);
    }
    out.log_value = max_log + std::log(scaled);
    out.terms = logs.size();
    return out;
}

/// Double-precision I_nu(y) for y > 0.
inline double bessel_i_approx(std::uint32_t nu, double y)
{
    if (y == 0) {
        return nu == 0 ? 1.0 : 0.0;
    }
    return std::exp(log_bessel_sum(y / 2, nu, static_cast<int>(nu)).log_value);
}

} // namespace bosonkit
