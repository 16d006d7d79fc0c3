#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/error_bounded_real.hpp>
#include <bosonkit/numeric.hpp>
#include <bosonkit/series.hpp>

namespace bosonkit {

/// Precision and accuracy request for one series evaluation.
struct series_spec {
    unsigned working_precision = 256;
    rational target_abs_error = rational(1, 1000000000);
    unsigned max_precision = 4096; // bits are doubled up to here on PRECISION_EXHAUSTED
};

/// B = prefactor * e^-1 * Σ_k term(k).
///
/// The term closure caches factorials, so one instance must not be shared
/// between threads; the free functions below each build their own.
struct dobinski_series {
    rational prefactor = 1;
    term_function term;
};

/// Whether the r > s series carries the 1/k! weight. The printed form omits it
/// and diverges.
enum class rs_variant { corrected, printed };

namespace detail {

// Running k! cache so term(k) does not recompute factorials from scratch.
class factorial_cache {
public:
    const integer& operator()(std::uint64_t k)
    {
        while (values_.size() <= k) {
            values_.push_back(values_.back() * values_.size());
        }
        return values_[k];
    }

private:
    std::vector<integer> values_{integer(1)};
};

inline void require(bool ok, errc code, const char* what)
{
    if (!ok) {
        throw error(code, what);
    }
}

} // namespace detail

/// Σ k^n / k!, the classical Dobiński series (e B(n)).
inline dobinski_series classic_series(std::uint32_t n)
{
    auto fact = std::make_shared<detail::factorial_cache>();
    return {rational(1), [n, fact](std::uint64_t k) {
                return rational(int_pow(integer(k), n), (*fact)(k));
            }};
}

/// Σ (1/k!) [(k+r)!/k!]^(n-1), the r = s series.
inline dobinski_series rr_series(std::uint32_t r, std::uint32_t n)
{
    detail::require(r >= 1 && n >= 1, errc::out_of_range, "rr series needs r >= 1, n >= 1");
    auto fact = std::make_shared<detail::factorial_cache>();
    return {rational(1), [r, n, fact](std::uint64_t k) {
                return rational(int_pow(falling_factorial(k + r, r), n - 1), (*fact)(k));
            }};
}

/// (r-s)^(s(n-1)) Σ_k (1/k!) Π_{j=1..s} Γ(n+x_j)/Γ(1+x_j), x_j = (k+j)/(r-s).
/// Each Gamma ratio is the rising product Π_{m=1..n-1} (x_j + m).
inline dobinski_series rs_series(std::uint32_t r, std::uint32_t s, std::uint32_t n,
                                 rs_variant variant = rs_variant::corrected)
{
    detail::require(s >= 1 && n >= 1, errc::out_of_range, "rs series needs s >= 1, n >= 1");
    detail::require(r > s, errc::unsupported, "rs series needs r > s");
    const std::uint32_t d = r - s;
    auto fact = std::make_shared<detail::factorial_cache>();
    const rational prefactor(int_pow(integer(d), static_cast<std::uint64_t>(s) * (n - 1)));
    return {prefactor, [d, s, n, variant, fact](std::uint64_t k) {
                rational product = 1;
                for (std::uint32_t j = 1; j <= s; ++j) {
                    const rational x(integer(k + j), integer(d));
                    for (std::uint32_t m = 1; m < n; ++m) {
                        product *= x + m;
                    }
                }
                if (variant == rs_variant::corrected) {
                    product /= (*fact)(k);
                }
                return product;
            }};
}

/// Prefactor Π_{j=1..r} (p(n-1)+j)!/(pj)! times the rFr series with upper
/// parameters pn+1+p(i-1) and lower parameters 1+p+p(i-1), i = 1..r, at
/// unit argument; targets B_{pr+p, pr}(n).
inline dobinski_series hypergeometric_series(std::uint32_t p, std::uint32_t r, std::uint32_t n)
{
    detail::require(p >= 1 && r >= 1 && n >= 1, errc::out_of_range,
                    "hypergeometric family needs p, r, n >= 1");
    rational prefactor = 1;
    std::vector<std::uint64_t> upper;
    std::vector<std::uint64_t> lower;
    for (std::uint32_t j = 1; j <= r; ++j) {
        prefactor *= rational(factorial(static_cast<std::uint64_t>(p) * (n - 1) + j),
                              factorial(static_cast<std::uint64_t>(p) * j));
        upper.push_back(static_cast<std::uint64_t>(p) * n + 1 + static_cast<std::uint64_t>(p) * (j - 1));
        lower.push_back(1 + p + static_cast<std::uint64_t>(p) * (j - 1));
    }
    // Terms are built incrementally; the closure keeps the last one.
    struct state {
        std::uint64_t index = 0;
        rational term = 1;
    };
    auto st = std::make_shared<state>();
    return {prefactor, [upper, lower, st](std::uint64_t m) {
                if (m < st->index) {
                    st->index = 0;
                    st->term = 1;
                }
                while (st->index < m) {
                    const std::uint64_t i = st->index;
                    rational ratio(1, i + 1);
                    for (std::size_t q = 0; q < upper.size(); ++q) {
                        ratio *= rational(integer(upper[q] + i), integer(lower[q] + i));
                    }
                    st->term *= ratio;
                    ++st->index;
                }
                return st->term;
            }};
}

/// Evaluates e^-1 times the series at a fixed cutoff K; the error bound
/// covers the tail beyond K and rounding at `bits`.
inline error_bounded_real evaluate_truncated(const dobinski_series& series, std::uint64_t cutoff,
                                             unsigned bits = 256)
{
    return scale_by_inverse_e(series.prefactor, partial_sum(series.term, cutoff), bits);
}

/// Sums to the requested error, raising the working precision as needed.
inline error_bounded_real evaluate(const dobinski_series& series, const series_spec& spec)
{
    if (spec.target_abs_error <= 0) {
        throw error(errc::domain, "target_abs_error must be positive");
    }
    // Tail contribution is prefactor * e^-1 * tail < target / 4.
    const rational series_target = spec.target_abs_error / (2 * series.prefactor);
    const partial_sum_result partial = sum_to_tolerance(series.term, series_target);
    for (unsigned bits = std::max(spec.working_precision, 1U); bits <= spec.max_precision; bits *= 2) {
        error_bounded_real out = scale_by_inverse_e(series.prefactor, partial, bits);
        if (out.abs_error() <= spec.target_abs_error) {
            return out;
        }
    }
    throw error(errc::precision_exhausted, "target error not reached at " +
                                               std::to_string(spec.max_precision) + " bits");
}

inline error_bounded_real dobinski_classic(std::uint32_t n, const series_spec& spec = {})
{
    detail::require(n >= 1, errc::out_of_range, "dobinski_classic needs n >= 1");
    return evaluate(classic_series(n), spec);
}

inline error_bounded_real dobinski_rr(std::uint32_t r, std::uint32_t n, const series_spec& spec = {})
{
    return evaluate(rr_series(r, n), spec);
}

inline error_bounded_real dobinski_rs(std::uint32_t r, std::uint32_t s, std::uint32_t n,
                                      const series_spec& spec = {},
                                      rs_variant variant = rs_variant::corrected)
{
    return evaluate(rs_series(r, s, n, variant), spec);
}

inline error_bounded_real bell_hypergeometric(std::uint32_t p, std::uint32_t r, std::uint32_t n,
                                              const series_spec& spec = {})
{
    return evaluate(hypergeometric_series(p, r, n), spec);
}

} // namespace bosonkit
