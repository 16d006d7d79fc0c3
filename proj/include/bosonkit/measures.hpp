#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <bosonkit/bessel.hpp>
#include <bosonkit/dobinski.hpp>
#include <bosonkit/error.hpp>
#include <bosonkit/error_bounded_real.hpp>
#include <bosonkit/numeric.hpp>
#include <bosonkit/series.hpp>
#include <bosonkit/stirling.hpp>

namespace bosonkit {

/// Weighted atoms on [0, ∞). Weights are e^-1 times an exact rational, so
/// moments are Dobiński-type series with certified tails.
struct discrete_measure {
    std::string name;
    std::function<rational(std::uint64_t)> location;
    std::function<rational(std::uint64_t)> scaled_weight; // weight * e
    bool unit_mass = false;
};

/// Atoms at x = k with weight e^-1 / k!, k >= 0. The k = 0 atom sits at the
/// origin: it carries mass 1/e and contributes nothing to moments n >= 1.
inline discrete_measure dirac_comb()
{
    auto fact = std::make_shared<detail::factorial_cache>();
    return {"dirac_comb", [](std::uint64_t k) { return rational(integer(k)); },
            [fact](std::uint64_t k) { return rational(integer(1), (*fact)(k)); }, true};
}

/// Atoms at x_k = (k+r)!/k! with weight e^-1 / (k! x_k); its n-th moment is
/// the r = s Dobiński series for B_{r,r}(n).
inline discrete_measure rarefied_comb(std::uint32_t r)
{
    if (r < 1) {
        throw error(errc::out_of_range, "rarefied_comb needs r >= 1");
    }
    auto fact = std::make_shared<detail::factorial_cache>();
    return {"rarefied_comb(" + std::to_string(r) + ")",
            [r](std::uint64_t k) { return rational(falling_factorial(k + r, r)); },
            [r, fact](std::uint64_t k) {
                return rational(integer(1), (*fact)(k) * falling_factorial(k + r, r));
            },
            false};
}

/// Upper bound on the weight of atoms k > cutoff.
inline rational omitted_weight_bound(const discrete_measure& m, std::uint64_t cutoff)
{
    const partial_sum_result p = partial_sum(m.scaled_weight, cutoff);
    if (!p.tail_bound) {
        throw error(errc::precision_exhausted, "weight tail not certified at this cutoff");
    }
    // e^-1 < 3/8
    return *p.tail_bound * rational(3, 8);
}

inline error_bounded_real total_mass(const discrete_measure& m, const rational& target_error, unsigned bits = 256)
{
    return evaluate(dobinski_series{rational(1), m.scaled_weight},
                    series_spec{bits, target_error, 4096});
}

inline error_bounded_real moment(const discrete_measure& m, std::uint32_t n, const rational& target_error,
                                 unsigned bits = 256)
{
    if (n == 0) {
        if (!m.unit_mass) {
            throw error(errc::unsupported_moment, m.name + " does not have unit mass");
        }
        return total_mass(m, target_error, bits);
    }
    auto location = m.location;
    auto weight = m.scaled_weight;
    term_function term = [location, weight, n](std::uint64_t k) {
        return int_pow(location(k), n) * weight(k);
    };
    return evaluate(dobinski_series{rational(1), term}, series_spec{bits, target_error, 4096});
}

/// Density value with an error estimate (series truncation plus a rounding
/// budget for the double-precision logs and exponentials).
struct density_value {
    double value = 0;
    double abs_error = 0;
};

/// W_{2r,r}(x) = (1/(e r)) x^((2-3r)/(2r)) exp(-x^(1/r)) I_r(2 x^(1/(2r))) on
/// (0, ∞).
class continuous_density {
public:
    explicit continuous_density(std::uint32_t r) : r_(r)
    {
        if (r < 1) {
            throw error(errc::out_of_range, "weight_2r_r needs r >= 1");
        }
    }

    std::uint32_t r() const noexcept { return r_; }
    std::string name() const { return "weight_2r_r(" + std::to_string(r_) + ")"; }

    density_value operator()(double x) const
    {
        if (!(x > 0) || !std::isfinite(x)) {
            throw error(errc::domain, "density is defined for finite x > 0");
        }
        // With u = x^(1/(2r)): x^((2-3r)/(2r)) I_r(2u) = Σ u^(2m+2-2r) / (m!(m+r)!).
        const double u = std::pow(x, 1.0 / (2.0 * r_));
        const log_series_value s = log_bessel_sum(u, r_, 2 - 2 * static_cast<int>(r_));
        const double log_density = -1.0 - std::log(static_cast<double>(r_)) - u * u + s.log_value;
        const double value = std::exp(log_density);
        const double rounding =
            8 * std::numeric_limits<double>::epsilon() * (2 + std::abs(log_density) + static_cast<double>(s.terms));
        return {value, value * (s.relative_truncation + rounding) + std::numeric_limits<double>::denorm_min()};
    }

private:
    std::uint32_t r_;
};

inline continuous_density weight_2r_r(std::uint32_t r) { return continuous_density(r); }

namespace detail {

// ∫_U^∞ 2 u^a e^{-(u-1)^2} du, which dominates the integrand tail since
// I_r(2u) <= e^{2u}. Valid when c = 2(U-1) - max(a,0)/U > 0.
inline double gaussian_tail_bound(double a, double cutoff)
{
    const double c = 2 * (cutoff - 1) - std::max(a, 0.0) / cutoff;
    if (c <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return 2 * std::exp(a * std::log(cutoff) - (cutoff - 1) * (cutoff - 1)) / c;
}

struct quadrature_result {
    double value = 0;
    double abs_error = 0;
};

// ∫_0^∞ x^n W_{2r,r}(x) dx after u = x^(1/(2r)):
// (2/e) ∫_0^∞ e^{-u^2} Σ_m u^(2m+2rn+1) / (m!(m+r)!) du.
inline quadrature_result density_moment(std::uint32_t r, std::uint32_t n, double target)
{
    const int lead = 2 * static_cast<int>(r * n) + 1;
    const double a = lead - static_cast<double>(r); // power in u^a I_r(2u)
    double cutoff = 2;
    while (gaussian_tail_bound(a, cutoff) > target / 10) {
        cutoff += 0.5;
    }
    const double tail = gaussian_tail_bound(a, cutoff);
    double max_truncation = 0;
    auto integrand = [&](double u) {
        if (u <= 0) {
            return 0.0;
        }
        const log_series_value s = log_bessel_sum(u, r, lead);
        max_truncation = std::max(max_truncation, s.relative_truncation);
        return 2 * std::exp(s.log_value - u * u - 1.0);
    };
    double quad_error = 0;
    double l1 = 0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
    // Unit panels keep the adaptive estimate local to where the integrand lives.
    double total = 0;
    for (double lo = 0; lo < cutoff; lo += 1) {
        const double hi = std::min(lo + 1, cutoff);
        double panel_error = 0;
        double panel_l1 = 0;
        total += gk::integrate(integrand, lo, hi, 8, 1e-13, &panel_error, &panel_l1);
        quad_error += panel_error;
        l1 += panel_l1;
    }
    const double rounding = 64 * std::numeric_limits<double>::epsilon() * l1;
    return {total, quad_error + rounding + tail + max_truncation * l1};
}

} // namespace detail

/// Moment of the continuous density. Reported as an error-bounded real whose
/// value is the exact rational of the double result.
inline error_bounded_real moment(const continuous_density& w, std::uint32_t n, double target_error)
{
    if (n == 0) {
        throw error(errc::unsupported_moment, w.name() + " does not have unit mass; use total_mass");
    }
    if (!(target_error > 0)) {
        throw error(errc::domain, "target error must be positive");
    }
    const auto q = detail::density_moment(w.r(), n, target_error);
    if (q.abs_error > target_error) {
        throw error(errc::precision_exhausted, "quadrature error " + std::to_string(q.abs_error) +
                                                   " above target");
    }
    return error_bounded_real(rational(q.value), rational(q.abs_error), 53);
}

inline error_bounded_real total_mass(const continuous_density& w, double target_error)
{
    const auto q = detail::density_moment(w.r(), 0, target_error);
    if (q.abs_error > target_error) {
        throw error(errc::precision_exhausted, "quadrature error above target");
    }
    return error_bounded_real(rational(q.value), rational(q.abs_error), 53);
}

/// Mass of W_{2r,r}: e^-1 Σ_{m>=0} 1/(m+r)!, i.e. 1 - e^-1 Σ_{j<r} 1/j!.
inline error_bounded_real expected_mass_2r_r(std::uint32_t r, const rational& target_error)
{
    auto fact = std::make_shared<detail::factorial_cache>();
    term_function term = [r, fact](std::uint64_t m) { return rational(integer(1), (*fact)(m + r)); };
    return evaluate(dobinski_series{rational(1), term}, series_spec{256, target_error, 4096});
}

struct moment_row {
    std::uint32_t n = 0;
    error_bounded_real moment;
    integer bell;
    bool passed = false;
};

struct moment_report {
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::string measure;
    double tol = 0;
    std::vector<moment_row> rows;
    error_bounded_real mass;
    error_bounded_real expected_mass; // meaningful for the continuous family
    bool mass_passed = false;
    std::size_t positivity_samples = 0;
    double positivity_min = 0;
    bool positivity_passed = false;

    bool passed() const
    {
        bool ok = mass_passed && positivity_passed;
        for (const auto& row : rows) {
            ok = ok && row.passed;
        }
        return ok;
    }
};

/// Moments of the weight function for B_{r,s} against the exact Bell numbers.
/// Supported: (1,1) Dirac comb, (r,r) rarefied comb, (2q,q) Bessel density.
inline moment_report verify_moments(std::uint32_t r, std::uint32_t s, std::uint32_t n_max, double tol)
{
    if (n_max < 1) {
        throw error(errc::out_of_range, "verify_moments needs n_max >= 1");
    }
    if (!(tol > 0)) {
        throw error(errc::domain, "tol must be positive");
    }
    const bool discrete = (r == s && r >= 1);
    const bool bessel = (s >= 1 && r == 2 * s);
    if (!discrete && !bessel) {
        throw error(errc::unsupported_family, "no weight function for (r, s) = (" + std::to_string(r) +
                                                  ", " + std::to_string(s) + ")");
    }
    moment_report out;
    out.r = r;
    out.s = s;
    out.tol = tol;
    const std::vector<integer> bells = bell_sequence(r, s, n_max);
    const rational rtol(tol);

    auto check = [&](std::uint32_t n, const error_bounded_real& m) {
        const rational scale = rational(bells[n]) * rtol;
        const bool ok = abs(m.value() - rational(bells[n])) <= scale && m.abs_error() <= scale;
        out.rows.push_back({n, m, bells[n], ok});
    };

    if (discrete) {
        const discrete_measure m = (r == 1) ? dirac_comb() : rarefied_comb(r);
        out.measure = m.name;
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            check(n, moment(m, n, rtol * rational(bells[n]) / 4));
        }
        out.mass = total_mass(m, rtol / 4);
        if (m.unit_mass) {
            out.expected_mass = error_bounded_real(rational(1), rational(0));
            out.mass_passed = abs(out.mass.value() - 1) + out.mass.abs_error() <= rtol;
        } else {
            // No normalization is claimed for the rarefied comb; the mass is reported only.
            out.expected_mass = out.mass;
            out.mass_passed = true;
        }
        bool positive = true;
        rational min_weight = m.scaled_weight(0);
        rational previous_location = -1;
        const std::uint64_t atoms = 1000;
        for (std::uint64_t k = 0; k < atoms; ++k) {
            const rational w = m.scaled_weight(k);
            const rational x = m.location(k);
            positive = positive && w > 0 && x > previous_location;
            min_weight = std::min(min_weight, w);
            previous_location = x;
        }
        out.positivity_samples = atoms;
        out.positivity_min = to_double(min_weight);
        out.positivity_passed = positive;
        return out;
    }

    const continuous_density w = weight_2r_r(s);
    out.measure = w.name();
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        check(n, moment(w, n, tol * bells[n].convert_to<double>() / 4));
    }
    out.mass = total_mass(w, tol / 4);
    out.expected_mass = expected_mass_2r_r(s, rtol / 1000);
    out.mass_passed = abs(out.mass.value() - out.expected_mass.value()) <=
                      rtol - out.expected_mass.abs_error() && out.mass.abs_error() <= rtol;
    const std::size_t samples = 1000;
    bool positive = true;
    double min_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = std::pow(10.0, -6.0 + 9.0 * static_cast<double>(i) / (samples - 1));
        const density_value d = w(x);
        positive = positive && d.value >= 0 && std::isfinite(d.value);
        min_value = std::min(min_value, d.value);
    }
    out.positivity_samples = samples;
    out.positivity_min = min_value;
    out.positivity_passed = positive;
    return out;
}

} // namespace bosonkit
