#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/normal_form.hpp>

namespace bosonkit {

/// The monomial (a†)^r a^s raised to the n-th power, with r >= s >= 1.
class monomial_spec {
public:
    monomial_spec(std::uint32_t r, std::uint32_t s, std::uint32_t n) : r_(r), s_(s), n_(n)
    {
        if (s < 1) {
            throw error(errc::out_of_range, "annihilation exponent s must be >= 1");
        }
        if (r < s) {
            throw error(errc::unsupported,
                        "r = " + std::to_string(r) + " < s = " + std::to_string(s) +
                            " is outside the r >= s family");
        }
    }

    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t s() const noexcept { return s_; }
    std::uint32_t n() const noexcept { return n_; }

    /// Creation-minus-annihilation degree shared by every term, n (r - s).
    std::uint32_t excess() const noexcept { return n_ * (r_ - s_); }

    monomial_spec with_power(std::uint32_t n) const { return monomial_spec(r_, s_, n); }

    friend bool operator==(const monomial_spec&, const monomial_spec&) = default;

private:
    std::uint32_t r_;
    std::uint32_t s_;
    std::uint32_t n_;
};

/// Normal forms of [(a†)^r a^s]^m for m = 0..n, by repeated right
/// multiplication.
inline std::vector<normal_form> monomial_power_sequence(const monomial_spec& spec)
{
    std::vector<normal_form> out;
    out.reserve(spec.n() + 1);
    out.push_back(normal_form::identity());
    const normal_form base = normal_form::monomial(spec.r(), spec.s());
    for (std::uint32_t m = 1; m <= spec.n(); ++m) {
        out.push_back(multiply(out.back(), base));
    }
    return out;
}

inline normal_form monomial_power_normal_form(const monomial_spec& spec)
{
    normal_form acc = normal_form::identity();
    const normal_form base = normal_form::monomial(spec.r(), spec.s());
    for (std::uint32_t m = 0; m < spec.n(); ++m) {
        acc = multiply(acc, base);
    }
    return acc;
}

/// Reads S_{r,s}(n,k), k = s..ns, off the coefficient of a†^(n(r-s)+k) a^k.
inline std::map<std::uint32_t, integer> extract_stirling(const normal_form& nf, const monomial_spec& spec)
{
    if (spec.n() < 1) {
        throw error(errc::out_of_range, "Stirling coefficients need n >= 1");
    }
    const std::uint32_t lo = spec.s();
    const std::uint32_t hi = spec.n() * spec.s();
    std::map<std::uint32_t, integer> out;
    for (const auto& [key, c] : nf.terms()) {
        if (key.creation < key.annihilation ||
            key.creation - key.annihilation != spec.excess()) {
            throw error(errc::malformed, "term a†^" + std::to_string(key.creation) + " a^" +
                                             std::to_string(key.annihilation) +
                                             " has excess degree != n(r-s)");
        }
        if (key.annihilation < lo || key.annihilation > hi) {
            throw error(errc::malformed,
                        "annihilation degree " + std::to_string(key.annihilation) + " outside [s, ns]");
        }
        out.emplace(key.annihilation, c);
    }
    return out;
}

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class Scalar, class Coeff>
Scalar scalar_from(const Coeff& c)
{
    if constexpr (is_complex<Scalar>::value) {
        return Scalar(c.template convert_to<typename Scalar::value_type>());
    } else if constexpr (std::is_arithmetic_v<Scalar>) {
        return c.template convert_to<Scalar>();
    } else {
        return Scalar(c);
    }
}

} // namespace detail

/// <z| nf |z> = Σ c_ij (z*)^i z^j for a normally ordered nf.
template <class Scalar, class Coeff>
Scalar coherent_expectation(const basic_normal_form<Coeff>& nf, const Scalar& z)
{
    Scalar zbar = z;
    if constexpr (detail::is_complex<Scalar>::value) {
        zbar = std::conj(z);
    }
    Scalar out(0);
    for (const auto& [key, c] : nf.terms()) {
        out += detail::scalar_from<Scalar>(c) * int_pow(zbar, key.creation) *
               int_pow(z, key.annihilation);
    }
    return out;
}

} // namespace bosonkit
