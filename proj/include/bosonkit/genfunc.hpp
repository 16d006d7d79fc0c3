#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/formal_series.hpp>
#include <bosonkit/monomial.hpp>
#include <bosonkit/normal_form.hpp>
#include <bosonkit/numeric.hpp>
#include <bosonkit/stirling.hpp>

namespace bosonkit {

using power_series = formal_series<rational>;

template <>
struct ring_one<rational_normal_form> {
    static rational_normal_form value() { return rational_normal_form::identity(); }
};

struct double_dot_multiplies {
    rational_normal_form operator()(const rational_normal_form& x, const rational_normal_form& y) const
    {
        return double_dot_product(x, y);
    }
};

/// Power series in λ whose coefficients are operator polynomials in a†, a.
/// Products treat a† and a as commuting symbols, i.e. they act inside : :.
using operator_series = formal_series<rational_normal_form, double_dot_multiplies>;

/// Sign of the exponent in (1 - (r-1)λ)^(±1/(r-1)). The printed form uses +;
/// only − reproduces the Bell numbers.
enum class exponent_sign { corrected, printed };

inline rational r1_exponent(std::uint32_t r, exponent_sign sign)
{
    const rational magnitude(1, static_cast<long>(r - 1));
    return sign == exponent_sign::corrected ? rational(-magnitude) : magnitude;
}

/// exp(e^λ - 1).
inline power_series egf_classic(std::size_t order)
{
    power_series inner = exponential_series(1, order);
    inner[0] = 0;
    return exp(inner);
}

/// exp{(1 - (r-1)λ)^(-1/(r-1)) - 1}, the EGF of B_{r,1}(n).
inline power_series egf_r1(std::uint32_t r, std::size_t order,
                           exponent_sign sign = exponent_sign::corrected)
{
    if (r < 2) {
        throw error(errc::out_of_range, "egf_r1 needs r >= 2");
    }
    power_series inner = binomial_series(-rational(static_cast<long>(r - 1)), r1_exponent(r, sign), order);
    inner[0] = 0;
    return exp(inner);
}

/// Σ_m [(a†)^r a]^m λ^m / m!, each power normally ordered by the rewriting
/// engine.
inline operator_series normal_exponential_lhs(std::uint32_t r, std::size_t order)
{
    const auto powers = monomial_power_sequence(monomial_spec(r, 1, static_cast<std::uint32_t>(order)));
    operator_series out(order);
    for (std::size_t m = 0; m <= order; ++m) {
        out[m] = powers[m].transform<rational>([](const integer& c) { return rational(c); });
        out[m] *= rational(integer(1), factorial(m));
    }
    return out;
}

/// The double-dot exponential :exp{[(1 - (r-1)λ a†^(r-1))^(-1/(r-1)) - 1] a†a}:
/// expanded in λ with a†, a commuting, each monomial then read as normally
/// ordered. For r = 1 the bracket is e^λ - 1.
inline operator_series normal_exponential_rhs(std::uint32_t r, std::size_t order,
                                              exponent_sign sign = exponent_sign::corrected)
{
    if (r < 1) {
        throw error(errc::out_of_range, "normal exponential needs r >= 1");
    }
    operator_series bracket(order);
    if (r == 1) {
        const power_series e = exponential_series(1, order);
        for (std::size_t m = 1; m <= order; ++m) {
            bracket[m] = rational_normal_form::monomial(0, 0, e[m]);
        }
    } else {
        const power_series binom =
            binomial_series(-rational(static_cast<long>(r - 1)), r1_exponent(r, sign), order);
        for (std::size_t m = 1; m <= order; ++m) {
            bracket[m] = rational_normal_form::monomial(static_cast<std::uint32_t>(m * (r - 1)), 0, binom[m]);
        }
    }
    const operator_series number_op =
        operator_series::constant(order, rational_normal_form::monomial(1, 1));
    return exp(bracket * number_op);
}

struct normal_exponential_report {
    std::uint32_t r = 1;
    std::size_t order = 0;
    exponent_sign sign = exponent_sign::corrected;
    std::optional<std::size_t> first_mismatch;
    operator_series lhs{0};
    operator_series rhs{0};

    bool passed() const { return !first_mismatch.has_value(); }
};

/// Compares the normally ordered exponential of λ (a†)^r a against its
/// double-dot closed form, order by order.
inline normal_exponential_report verify_normal_exponential(std::uint32_t r, std::size_t order,
                                                           exponent_sign sign = exponent_sign::corrected)
{
    if (r < 1 || order < 1) {
        throw error(errc::out_of_range, "verify_normal_exponential needs r >= 1, order >= 1");
    }
    normal_exponential_report out;
    out.r = r;
    out.order = order;
    out.sign = sign;
    out.lhs = normal_exponential_lhs(r, order);
    out.rhs = normal_exponential_rhs(r, order, sign);
    for (std::size_t m = 0; m <= order; ++m) {
        if (!(out.lhs[m] == out.rhs[m])) {
            out.first_mismatch = m;
            break;
        }
    }
    return out;
}

/// Coefficients of an operator series evaluated in the coherent state z = 1.
inline power_series coherent_series_at_unity(const operator_series& series)
{
    power_series out(series.order());
    for (std::size_t m = 0; m <= series.order(); ++m) {
        out[m] = coherent_expectation(series[m], rational(1));
    }
    return out;
}

/// Outcome of the (n!)^t normalization heuristic.
struct normalization_order {
    std::uint32_t t = 0;
    /// Local growth exponent of [B(n+1)/B(n)] / (n+1)^(t+1) over the upper half
    /// of the window, for each t tried.
    std::vector<double> growth_exponents;
    bool heuristic = true;
};

/// Smallest t >= 0 for which [B(n+1)/B(n)] / (n+1)^(t+1) looks bounded over
/// n <= max_n, i.e. Σ B_{r,s}(n) / (n!)^(t+1) has a non-zero radius.
///
/// "Bounded" means the log-log slope of that ratio between n = max_n/2 and
/// n = max_n is at most `bounded_slope`; a slope of at least `growing_slope`
/// rejects t. Anything in between is INCONCLUSIVE.
inline normalization_order select_normalization_order(std::uint32_t r, std::uint32_t s, std::uint32_t max_n,
                                                      double bounded_slope = 0.05,
                                                      double growing_slope = 0.25)
{
    if (max_n < 6) {
        throw error(errc::out_of_range, "select_normalization_order needs max_n >= 6");
    }
    const std::vector<integer> b = bell_sequence(r, s, max_n + 1);
    auto ratio = [&b](std::uint32_t n) { return to_double(rational(b[n + 1], b[n])); };
    const std::uint32_t lo = max_n / 2;
    const std::uint32_t hi = max_n;
    normalization_order out;
    for (std::uint32_t t = 0; t <= 2 * r; ++t) {
        const double q_lo = ratio(lo) / std::pow(lo + 1.0, t + 1.0);
        const double q_hi = ratio(hi) / std::pow(hi + 1.0, t + 1.0);
        const double slope = std::log(q_hi / q_lo) / std::log((hi + 1.0) / (lo + 1.0));
        out.growth_exponents.push_back(slope);
        if (slope <= bounded_slope) {
            out.t = t;
            return out;
        }
        if (slope < growing_slope) {
            throw error(errc::inconclusive, "growth slope " + std::to_string(slope) + " at t = " +
                                                std::to_string(t) + " has not stabilized by n = " +
                                                std::to_string(max_n));
        }
    }
    throw error(errc::inconclusive, "no t <= 2r found");
}

} // namespace bosonkit
