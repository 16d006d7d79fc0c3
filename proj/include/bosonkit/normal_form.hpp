#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <bosonkit/numeric.hpp>

namespace bosonkit {

enum class letter : std::uint8_t { create, annihilate };

/// A product of single-mode ladder operators, read left to right. The empty
/// word is the identity.
using boson_word = std::vector<letter>;

/// Exponents of a normally ordered monomial a†^creation a^annihilation.
struct exponent_pair {
    std::uint32_t creation = 0;
    std::uint32_t annihilation = 0;

    friend constexpr auto operator<=>(const exponent_pair&, const exponent_pair&) = default;
};

/// Finite linear combination of normally ordered monomials a†^i a^j.
///
/// Zero coefficients are never stored, so structural equality of two forms is
/// equality of the operators they denote.
template <class Coeff>
class basic_normal_form {
public:
    using coefficient_type = Coeff;
    using term_map = std::map<exponent_pair, Coeff>;

    basic_normal_form() = default;

    static basic_normal_form identity() { return monomial(0, 0, Coeff(1)); }

    static basic_normal_form monomial(std::uint32_t creation, std::uint32_t annihilation,
                                      Coeff coeff = Coeff(1))
    {
        basic_normal_form out;
        out.add(exponent_pair{creation, annihilation}, std::move(coeff));
        return out;
    }

    void add(exponent_pair key, const Coeff& coeff)
    {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const term_map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(std::uint32_t creation, std::uint32_t annihilation) const
    {
        auto it = terms_.find(exponent_pair{creation, annihilation});
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Coeff coefficient_sum() const
    {
        Coeff out(0);
        for (const auto& [key, c] : terms_) {
            out += c;
        }
        return out;
    }

    basic_normal_form& operator+=(const basic_normal_form& other)
    {
        for (const auto& [key, c] : other.terms_) {
            add(key, c);
        }
        return *this;
    }

    basic_normal_form& operator*=(const Coeff& scalar)
    {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, c] : terms_) {
            c *= scalar;
        }
        return *this;
    }

    basic_normal_form& operator/=(const Coeff& scalar)
    {
        for (auto& [key, c] : terms_) {
            c /= scalar;
        }
        return *this;
    }

    friend basic_normal_form operator+(basic_normal_form lhs, const basic_normal_form& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    friend basic_normal_form operator*(basic_normal_form lhs, const Coeff& scalar)
    {
        lhs *= scalar;
        return lhs;
    }

    friend bool operator==(const basic_normal_form&, const basic_normal_form&) = default;

    template <class Other, class Convert>
    basic_normal_form<Other> transform(Convert convert) const
    {
        basic_normal_form<Other> out;
        for (const auto& [key, c] : terms_) {
            out.add(key, convert(c));
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        // Highest degree first reads like the usual textbook ordering.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) {
                os << " + ";
            }
            first = false;
            os << it->second;
            if (it->first.creation != 0) {
                os << "*ad^" << it->first.creation;
            }
            if (it->first.annihilation != 0) {
                os << "*a^" << it->first.annihilation;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_normal_form& nf)
    {
        return os << nf.to_string();
    }

private:
    term_map terms_;
};

using normal_form = basic_normal_form<integer>;
using rational_normal_form = basic_normal_form<rational>;

/// Which a·a† redex the letter-by-letter engine rewrites first.
enum class rewrite_order { leftmost, rightmost };

namespace detail {

inline std::optional<std::size_t> find_redex(const boson_word& w, rewrite_order order)
{
    if (w.size() < 2) {
        return std::nullopt;
    }
    if (order == rewrite_order::leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == letter::annihilate && w[i + 1] == letter::create) {
                return i;
            }
        }
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;) {
            if (w[i] == letter::annihilate && w[i + 1] == letter::create) {
                return i;
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Normal ordering by exhaustive application of a·a† → a†·a + 1.
///
/// This is the slow, obviously-correct engine; `multiply` is checked against it.
inline normal_form normal_order_word(const boson_word& word,
                                     rewrite_order order = rewrite_order::leftmost)
{
    std::map<boson_word, integer> pending{{word, integer(1)}};
    normal_form out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const boson_word& w = node.key();
        const integer& coeff = node.mapped();
        const auto pos = detail::find_redex(w, order);
        if (!pos) {
            const auto creations = static_cast<std::uint32_t>(
                std::count(w.begin(), w.end(), letter::create));
            out.add(exponent_pair{creations, static_cast<std::uint32_t>(w.size()) - creations},
                    coeff);
            continue;
        }
        boson_word swapped = w;
        std::swap(swapped[*pos], swapped[*pos + 1]);
        boson_word contracted;
        contracted.reserve(w.size() - 2);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
        pending[std::move(swapped)] += coeff;
        pending[std::move(contracted)] += coeff;
    }
    return out;
}

/// Operator product of two normal forms, using
/// a^j a†^i = Σ_l C(j,l) C(i,l) l! a†^(i-l) a^(j-l).
template <class Coeff>
basic_normal_form<Coeff> multiply(const basic_normal_form<Coeff>& x, const basic_normal_form<Coeff>& y)
{
    basic_normal_form<Coeff> out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const Coeff base = cx * cy;
            const std::uint32_t contractions = std::min(kx.annihilation, ky.creation);
            integer weight = 1; // C(j,l) C(i,l) l!
            for (std::uint32_t l = 0; l <= contractions; ++l) {
                if (l > 0) {
                    weight *= integer(kx.annihilation - l + 1) * (ky.creation - l + 1);
                    weight /= l;
                }
                out.add(exponent_pair{kx.creation + ky.creation - l,
                                      kx.annihilation + ky.annihilation - l},
                        base * Coeff(weight));
            }
        }
    }
    return out;
}

/// Product with the symbols treated as commuting, i.e. inside : :.
template <class Coeff>
basic_normal_form<Coeff> double_dot_product(const basic_normal_form<Coeff>& x,
                                            const basic_normal_form<Coeff>& y)
{
    basic_normal_form<Coeff> out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            out.add(exponent_pair{kx.creation + ky.creation, kx.annihilation + ky.annihilation},
                    cx * cy);
        }
    }
    return out;
}

inline std::string to_string(const boson_word& w)
{
    std::string out;
    for (letter l : w) {
        out += l == letter::create ? "+" : "-";
    }
    return out;
}

} // namespace bosonkit
