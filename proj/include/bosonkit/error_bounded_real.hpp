#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>

#include <bosonkit/error.hpp>
#include <bosonkit/numeric.hpp>

namespace bosonkit {

/// Rounds x to `bits` significant binary digits. Returns the rounded value; the
/// rounding error is at most |x| 2^-bits.
inline rational round_to_bits(const rational& x, unsigned bits)
{
    if (x == 0) {
        return x;
    }
    const integer num = boost::multiprecision::numerator(x);
    const integer den = boost::multiprecision::denominator(x);
    const auto num_bits = static_cast<long>(msb(abs(num)));
    const auto den_bits = static_cast<long>(msb(den));
    // 2^(shift) |x| has roughly `bits` bits before the binary point.
    const long shift = static_cast<long>(bits) - (num_bits - den_bits);
    integer scaled_num = num;
    integer scaled_den = den;
    if (shift >= 0) {
        scaled_num <<= static_cast<unsigned>(shift);
    } else {
        scaled_den <<= static_cast<unsigned>(-shift);
    }
    const integer mantissa = round_nearest(rational(scaled_num, scaled_den));
    if (shift >= 0) {
        return rational(mantissa, integer(1) << static_cast<unsigned>(shift));
    }
    return rational(mantissa << static_cast<unsigned>(-shift));
}

/// Decimal rendering of a rational with `frac_digits` digits after the point,
/// truncated toward zero.
inline std::string to_decimal_string(const rational& x, unsigned frac_digits)
{
    const bool negative = x < 0;
    const rational ax = negative ? rational(-x) : x;
    const integer scale = int_pow(integer(10), frac_digits);
    const integer scaled = boost::multiprecision::numerator(ax) * scale /
                           boost::multiprecision::denominator(ax);
    std::string digits = scaled.str();
    if (digits.size() <= frac_digits) {
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    }
    std::string out = digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) {
        out += '.';
        out += digits.substr(digits.size() - frac_digits);
    }
    return negative ? "-" + out : out;
}

/// A real number known to lie within `abs_error` of `value`.
///
/// Both fields are exact rationals; `value` is a dyadic rounded to the working
/// precision it was computed at, and `abs_error` already includes that rounding.
class error_bounded_real {
public:
    error_bounded_real() = default;

    error_bounded_real(rational value, rational abs_error, unsigned precision_bits = 0)
        : value_(std::move(value)), abs_error_(std::move(abs_error)), bits_(precision_bits)
    {
        if (abs_error_ < 0) {
            throw error(errc::domain, "negative error bound");
        }
    }

    const rational& value() const noexcept { return value_; }
    const rational& abs_error() const noexcept { return abs_error_; }
    unsigned precision_bits() const noexcept { return bits_; }

    double value_double() const { return to_double(value_); }
    double abs_error_double() const { return to_double(abs_error_); }

    bool contains(const rational& x) const { return abs(x - value_) <= abs_error_; }

    bool can_round() const { return abs_error_ < rational(1, 2); }

    /// The unique integer within the error interval; only allowed when
    /// abs_error < 1/2.
    integer round_to_integer() const
    {
        if (!can_round()) {
            throw error(errc::precision_exhausted,
                        "error bound " + to_decimal_string(abs_error_, 6) + " too wide to round");
        }
        return round_nearest(value_);
    }

    std::string to_string(unsigned frac_digits = 12) const
    {
        return to_decimal_string(value_, frac_digits) + " +/- " + error_string();
    }

    std::string error_string() const
    {
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << abs_error_double();
        return os.str();
    }

    friend error_bounded_real operator+(const error_bounded_real& a, const error_bounded_real& b)
    {
        return error_bounded_real(a.value_ + b.value_, a.abs_error_ + b.abs_error_,
                                  std::min(a.bits_, b.bits_));
    }

private:
    rational value_ = 0;
    rational abs_error_ = 0;
    unsigned bits_ = 0;
};

} // namespace bosonkit
