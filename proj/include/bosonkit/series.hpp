#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <bosonkit/error.hpp>
#include <bosonkit/error_bounded_real.hpp>
#include <bosonkit/numeric.hpp>

namespace bosonkit {

/// Terms t_0, t_1, ... of a series with positive exact terms whose ratio
/// t_{k+1}/t_k is non-increasing once it has dropped below one. Every series
/// in this library (polynomial-in-k over k!, and hypergeometric at unit
/// argument with a_i >= b_i) has this property, which is what makes the
/// geometric tail bound below valid.
using term_function = std::function<rational(std::uint64_t)>;

struct partial_sum_result {
    rational sum;                      // t_0 + ... + t_K
    std::uint64_t last_index = 0;      // K
    std::optional<rational> tail_bound; // bound on t_{K+1} + ...; empty if not yet certified
};

/// Geometric bound on the tail after t_K given ratio = t_{K+1}/t_K.
inline std::optional<rational> geometric_tail(const rational& last_term, const rational& ratio)
{
    if (ratio >= 1) {
        return std::nullopt;
    }
    return last_term * ratio / (1 - ratio);
}

/// Sum of t_0..t_K with the tail bound at that cutoff.
inline partial_sum_result partial_sum(const term_function& term, std::uint64_t cutoff)
{
    partial_sum_result out;
    rational last = 0;
    for (std::uint64_t k = 0; k <= cutoff; ++k) {
        last = term(k);
        out.sum += last;
    }
    out.last_index = cutoff;
    const rational next = term(cutoff + 1);
    if (last > 0) {
        out.tail_bound = geometric_tail(last, next / last);
    } else if (next == 0) {
        out.tail_bound = rational(0);
    }
    return out;
}

struct summation_limits {
    std::uint64_t divergence_check_from = 256; // ratio >= 1 beyond here means divergence
    std::uint64_t max_terms = 20000;
};

/// Sums until t_K < target/2 and t_{K+1}/t_K < 1/2, so the tail is below
/// t_K < target/2. Throws DIVERGENT when the term ratio stays >= 1.
inline partial_sum_result sum_to_tolerance(const term_function& term, const rational& target,
                                           summation_limits limits = {})
{
    if (target <= 0) {
        throw error(errc::domain, "target error must be positive");
    }
    partial_sum_result out;
    rational current = term(0);
    out.sum = current;
    for (std::uint64_t k = 0;; ++k) {
        const rational next = term(k + 1);
        if (current == 0 && next == 0) {
            out.last_index = k;
            out.tail_bound = rational(0);
            return out;
        }
        if (current > 0) {
            const rational ratio = next / current;
            if (current * 2 < target && ratio * 2 < 1) {
                out.last_index = k;
                out.tail_bound = geometric_tail(current, ratio);
                return out;
            }
            if (k >= limits.divergence_check_from && ratio >= 1) {
                throw error(errc::divergent, "term ratio " + to_decimal_string(ratio, 6) +
                                                 " >= 1 at k = " + std::to_string(k));
            }
        }
        if (k + 1 >= limits.max_terms) {
            throw error(errc::divergent, "no convergence within " + std::to_string(limits.max_terms) + " terms");
        }
        out.sum += next;
        current = next;
    }
}

/// Rational enclosure of 1/e: value within 2^-bits.
inline error_bounded_real inverse_e(unsigned bits)
{
    const rational target(integer(1), integer(1) << bits);
    rational sum = 0;
    integer fact = 1;
    for (std::uint64_t k = 0;; ++k) {
        if (k > 0) {
            fact *= k;
        }
        const rational term(integer(1), fact);
        sum += (k % 2 == 0) ? term : rational(-term);
        // Alternating with decreasing terms: error <= next term = 1/(k+1)!.
        const rational next(integer(1), fact * (k + 1));
        if (next <= target) {
            return error_bounded_real(sum, next, bits);
        }
    }
}

/// prefactor * e^-1 * (sum + tail) with tail in [0, tail_bound], rounded to
/// `bits` significant bits. Assumes prefactor > 0.
inline error_bounded_real scale_by_inverse_e(const rational& prefactor, const partial_sum_result& partial,
                                             unsigned bits)
{
    if (!partial.tail_bound) {
        throw error(errc::precision_exhausted, "series tail not yet certified at cutoff " +
                                                   std::to_string(partial.last_index));
    }
    const error_bounded_real inv_e = inverse_e(bits + 8);
    // The tail lies in [0, tail_bound]; centre the estimate on its midpoint.
    const rational half_tail = *partial.tail_bound / 2;
    const rational centred = partial.sum + half_tail;
    const rational exact = prefactor * inv_e.value() * centred;
    const rational rounded = round_to_bits(exact, bits);
    const rational err = abs(rounded - exact) + prefactor * inv_e.abs_error() * (partial.sum + *partial.tail_bound) +
                         prefactor * (inv_e.value() + inv_e.abs_error()) * half_tail;
    return error_bounded_real(rounded, err, bits);
}

} // namespace bosonkit
