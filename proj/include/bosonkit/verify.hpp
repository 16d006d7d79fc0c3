#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <bosonkit/dobinski.hpp>
#include <bosonkit/error.hpp>
#include <bosonkit/genfunc.hpp>
#include <bosonkit/measures.hpp>
#include <bosonkit/stirling.hpp>

namespace bosonkit {

struct check_result {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered (field, value) pairs. Integers are decimal strings; reals come as a
/// value field plus an abs_error field.
using result_row = std::vector<std::pair<std::string, std::string>>;

struct suite_result {
    std::string suite;
    std::vector<result_row> rows;
    std::vector<check_result> checks;

    bool passed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    void append(suite_result other)
    {
        for (auto& row : other.rows) {
            rows.push_back(std::move(row));
        }
        for (auto& c : other.checks) {
            checks.push_back(std::move(c));
        }
    }
};

namespace detail {

inline std::string pair_label(std::uint32_t r, std::uint32_t s)
{
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

inline std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

} // namespace detail

struct dobinski_options {
    series_spec spec;
    bool printed_b5 = false;
};

/// Series route for B_{r,s}(1..n_max) against the rewriting engine. For
/// r = s + 1 the hypergeometric route is checked as well.
inline suite_result verify_dobinski(std::uint32_t r, std::uint32_t s, std::uint32_t n_max,
                                    const dobinski_options& options = {})
{
    suite_result out{"dobinski", {}, {}};
    const std::vector<integer> bells = bell_sequence(r, s, n_max);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const std::string label = "B" + detail::pair_label(r, s) + "(" + std::to_string(n) + ")";
        std::string route;
        try {
            error_bounded_real value;
            if (r == s && r == 1) {
                route = "classic";
                value = dobinski_classic(n, options.spec);
            } else if (r == s) {
                route = "rr";
                value = dobinski_rr(r, n, options.spec);
            } else {
                route = options.printed_b5 ? "rs_printed" : "rs";
                value = dobinski_rs(r, s, n, options.spec,
                                    options.printed_b5 ? rs_variant::printed : rs_variant::corrected);
            }
            const bool ok = value.can_round() && value.contains(rational(bells[n])) &&
                            value.round_to_integer() == bells[n];
            out.rows.push_back({{"n", std::to_string(n)},
                                {"route", route},
                                {"value", to_decimal_string(value.value(), 15)},
                                {"abs_error", value.error_string()},
                                {"oracle", bells[n].str()}});
            out.checks.push_back({label + " " + route, ok,
                                  "series " + value.to_string(9) + " vs oracle " + bells[n].str()});
        } catch (const error& e) {
            out.checks.push_back({label + " " + route, false, e.what()});
        }
        if (r == s + 1 && !options.printed_b5) {
            try {
                const error_bounded_real value = bell_hypergeometric(1, s, n, options.spec);
                const bool ok = value.can_round() && value.contains(rational(bells[n]));
                out.rows.push_back({{"n", std::to_string(n)},
                                    {"route", "hypergeometric"},
                                    {"value", to_decimal_string(value.value(), 15)},
                                    {"abs_error", value.error_string()},
                                    {"oracle", bells[n].str()}});
                out.checks.push_back({label + " hypergeometric", ok,
                                      "series " + value.to_string(9) + " vs oracle " + bells[n].str()});
            } catch (const error& e) {
                out.checks.push_back({label + " hypergeometric", false, e.what()});
            }
        }
    }
    return out;
}

/// n! [λ^n] EGF against B_{r,1}(n) (r = 1: the classical EGF).
inline suite_result verify_egf(std::uint32_t r, std::uint32_t order, exponent_sign sign = exponent_sign::corrected)
{
    suite_result out{"egf", {}, {}};
    const power_series egf = (r == 1) ? egf_classic(order) : egf_r1(r, order, sign);
    const std::vector<integer> bells = bell_sequence(r, 1, order);
    for (std::uint32_t n = 0; n <= order; ++n) {
        const rational scaled = egf[n] * rational(factorial(n));
        const bool ok = scaled == rational(bells[n]);
        out.rows.push_back({{"n", std::to_string(n)},
                            {"coefficient", egf[n].str()},
                            {"n_factorial_times_coefficient", scaled.str()},
                            {"oracle", bells[n].str()}});
        out.checks.push_back({"egf" + detail::pair_label(r, 1) + " order " + std::to_string(n), ok,
                              scaled.str() + " vs " + bells[n].str()});
    }
    return out;
}

/// Normally ordered exponential of λ (a†)^r a against its double-dot form,
/// plus the coherent-state reduction to the EGF at z = 1.
inline suite_result verify_norm(std::uint32_t r, std::uint32_t order, exponent_sign sign = exponent_sign::corrected)
{
    suite_result out{"norm", {}, {}};
    const normal_exponential_report report = verify_normal_exponential(r, order, sign);
    for (std::size_t m = 0; m <= order; ++m) {
        const bool ok = report.lhs[m] == report.rhs[m];
        out.rows.push_back({{"order", std::to_string(m)},
                            {"lhs", report.lhs[m].to_string()},
                            {"rhs", report.rhs[m].to_string()}});
        out.checks.push_back({"norm r=" + std::to_string(r) + " order " + std::to_string(m), ok,
                              ok ? "match" : "lhs " + report.lhs[m].to_string() + " != rhs " + report.rhs[m].to_string()});
    }
    const power_series at_unity = coherent_series_at_unity(report.rhs);
    const power_series egf = (r == 1) ? egf_classic(order) : egf_r1(r, order, sign);
    out.checks.push_back({"norm r=" + std::to_string(r) + " coherent state z=1 equals EGF", at_unity == egf,
                          "term-by-term comparison through order " + std::to_string(order)});
    return out;
}

inline suite_result verify_moment_suite(std::uint32_t r, std::uint32_t s, std::uint32_t n_max, double tol)
{
    suite_result out{"moments", {}, {}};
    const moment_report report = verify_moments(r, s, n_max, tol);
    const std::string label = "moments" + detail::pair_label(r, s);
    for (const auto& row : report.rows) {
        out.rows.push_back({{"n", std::to_string(row.n)},
                            {"measure", report.measure},
                            {"value", to_decimal_string(row.moment.value(), 12)},
                            {"abs_error", row.moment.error_string()},
                            {"oracle", row.bell.str()}});
        out.checks.push_back({label + " n=" + std::to_string(row.n), row.passed,
                              row.moment.to_string(10) + " vs " + row.bell.str()});
    }
    out.rows.push_back({{"n", "0"},
                        {"measure", report.measure},
                        {"value", to_decimal_string(report.mass.value(), 12)},
                        {"abs_error", report.mass.error_string()},
                        {"expected", to_decimal_string(report.expected_mass.value(), 12)}});
    out.checks.push_back({label + " mass", report.mass_passed,
                          "mass " + report.mass.to_string(12) + " expected " +
                              to_decimal_string(report.expected_mass.value(), 12)});
    out.checks.push_back({label + " positivity", report.positivity_passed,
                          std::to_string(report.positivity_samples) +
                              (report.positivity_passed ? " samples, all >= 0" : " samples, negative value found")});
    return out;
}

/// The full grid: every series, generating-function, operator and moment
/// identity at its standard range.
inline suite_result verify_all(const series_spec& spec, double tol)
{
    suite_result out{"all", {}, {}};
    const dobinski_options options{spec, false};
    out.append(verify_dobinski(1, 1, 10, options));
    for (std::uint32_t r = 2; r <= 3; ++r) {
        out.append(verify_dobinski(r, r, 4, options));
    }
    out.append(verify_dobinski(2, 1, 5, options));
    out.append(verify_dobinski(3, 1, 5, options));
    out.append(verify_dobinski(3, 2, 5, options));
    out.append(verify_egf(1, 8));
    out.append(verify_egf(2, 6));
    out.append(verify_egf(3, 6));
    for (std::uint32_t r = 1; r <= 3; ++r) {
        out.append(verify_norm(r, 5));
    }
    out.append(verify_moment_suite(1, 1, 5, tol));
    out.append(verify_moment_suite(2, 2, 4, tol));
    out.append(verify_moment_suite(2, 1, 5, tol));
    return out;
}

} // namespace bosonkit
