#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <bosonkit/error.hpp>
#include <bosonkit/numeric.hpp>

namespace bosonkit {

/// Multiplicative identity of a coefficient ring. Specialize for coefficient
/// types that are not constructible from 1.
template <class Coeff>
struct ring_one {
    static Coeff value() { return Coeff(1); }
};

/// Power series in λ truncated at λ^order, over a commutative coefficient ring
/// with product `Mul` that is also a Q-algebra (coefficients can be scaled by
/// rationals).
template <class Coeff, class Mul = std::multiplies<Coeff>>
class formal_series {
public:
    explicit formal_series(std::size_t order) : coeffs_(order + 1) {}

    formal_series(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static formal_series constant(std::size_t order, Coeff c)
    {
        formal_series out(order);
        out.coeffs_[0] = std::move(c);
        return out;
    }

    static formal_series one(std::size_t order) { return constant(order, ring_one<Coeff>::value()); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Coeff& operator[](std::size_t m) const { return coeffs_.at(m); }
    Coeff& operator[](std::size_t m) { return coeffs_.at(m); }
    const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

    formal_series& operator+=(const formal_series& other)
    {
        check_order(other);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            coeffs_[m] += other.coeffs_[m];
        }
        return *this;
    }

    formal_series& operator-=(const formal_series& other)
    {
        check_order(other);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) {
            coeffs_[m] += other.coeffs_[m] * rational(-1);
        }
        return *this;
    }

    formal_series& operator*=(const rational& scalar)
    {
        for (auto& c : coeffs_) {
            c *= scalar;
        }
        return *this;
    }

    friend formal_series operator+(formal_series a, const formal_series& b) { return a += b; }
    friend formal_series operator-(formal_series a, const formal_series& b) { return a -= b; }

    friend formal_series operator*(const formal_series& a, const formal_series& b)
    {
        a.check_order(b);
        Mul mul;
        formal_series out(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    out.coeffs_[i + j] += mul(a.coeffs_[i], b.coeffs_[j]);
                }
            }
        }
        return out;
    }

    friend bool operator==(const formal_series&, const formal_series&) = default;

private:
    void check_order(const formal_series& other) const
    {
        if (other.coeffs_.size() != coeffs_.size()) {
            throw error(errc::malformed, "formal series of different truncation orders");
        }
    }

    static bool is_zero(const Coeff& c) { return c == Coeff{}; }

    std::vector<Coeff> coeffs_;
};

/// exp(f) for f with zero constant term, from m g_m = Σ_{k=1..m} k f_k g_{m-k}.
template <class Coeff, class Mul>
formal_series<Coeff, Mul> exp(const formal_series<Coeff, Mul>& f)
{
    if (!(f[0] == Coeff{})) {
        throw error(errc::domain, "exp of a series needs a zero constant term");
    }
    Mul mul;
    auto g = formal_series<Coeff, Mul>::one(f.order());
    for (std::size_t m = 1; m <= f.order(); ++m) {
        Coeff acc{};
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k] == Coeff{}) {
                continue;
            }
            Coeff term = mul(f[k], g[m - k]);
            term *= rational(static_cast<long>(k));
            acc += term;
        }
        acc *= rational(1, static_cast<long>(m));
        g[m] = std::move(acc);
    }
    return g;
}

/// g∘f = Σ_m g_m f^m for f with zero constant term, by Horner's rule.
template <class Mul>
formal_series<rational, Mul> compose(const formal_series<rational, Mul>& g,
                                     const formal_series<rational, Mul>& f)
{
    if (f[0] != 0) {
        throw error(errc::domain, "composition needs an inner series with zero constant term");
    }
    using series = formal_series<rational, Mul>;
    series out(f.order());
    for (std::size_t m = g.order() + 1; m-- > 0;) {
        out = out * f;
        out[0] += g[m];
    }
    return out;
}

/// Generalized binomial coefficient C(alpha, m) for rational alpha.
inline rational binomial(const rational& alpha, std::size_t m)
{
    rational out = 1;
    for (std::size_t i = 0; i < m; ++i) {
        out *= (alpha - static_cast<long>(i)) / rational(static_cast<long>(i + 1));
    }
    return out;
}

/// (1 + c λ)^alpha = Σ_m C(alpha, m) c^m λ^m.
inline formal_series<rational> binomial_series(const rational& c, const rational& alpha, std::size_t order)
{
    formal_series<rational> out(order);
    rational c_power = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        out[m] = binomial(alpha, m) * c_power;
        c_power *= c;
    }
    return out;
}

/// exp(c λ) = Σ_m c^m λ^m / m!.
inline formal_series<rational> exponential_series(const rational& c, std::size_t order)
{
    formal_series<rational> out(order);
    rational term = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        out[m] = term;
        term *= c / rational(static_cast<long>(m + 1));
    }
    return out;
}

} // namespace bosonkit
