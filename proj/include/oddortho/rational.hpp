#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace oddortho {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("oddortho: integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("oddortho: integer overflow in multiplication");
    return r;
}

inline std::int64_t parse_int(std::string_view s) {
    const std::string_view literal = s;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
        if (!s.empty() && s.front() == '-') s = literal;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw std::overflow_error("oddortho: integer literal out of range");
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw DomainError("malformed integer literal '" + std::string(literal) + "'");
    return v;
}

}  // namespace detail

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
///
/// Coordinates of weights live here: restriction to the semisimple part of a
/// Levi factor divides by k, so half-integers alone do not suffice.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    /// True when 2*value is an integer.
    bool is_half_integer() const noexcept { return den_ == 1 || den_ == 2; }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = std::gcd(a.den_, b.den_);
        std::int64_t lhs = detail::checked_mul(a.num_, b.den_ / g);
        std::int64_t rhs = detail::checked_mul(b.num_, a.den_ / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(a.den_, b.den_ / g));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __extension__ using wide = __int128;
        const wide lhs = static_cast<wide>(a.num_) * b.den_;
        const wide rhs = static_cast<wide>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// Largest integer <= value.
    std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }
    /// Smallest integer >= value.
    std::int64_t ceil() const noexcept { return -Rational(-num_, den_, raw_tag{}).floor(); }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p" or "p/q".
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(detail::parse_int(s));
        return Rational(detail::parse_int(s.substr(0, slash)), detail::parse_int(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct raw_tag {};
    constexpr Rational(std::int64_t num, std::int64_t den, raw_tag) noexcept : num_(num), den_(den) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() noexcept = default;

    static constexpr HalfInt from_twice(std::int64_t twice) noexcept { return HalfInt(twice); }
    static HalfInt from_int(std::int64_t v) { return HalfInt(detail::checked_mul(v, 2)); }
    static HalfInt from_rational(const Rational& r) {
        if (!r.is_half_integer()) throw DomainError("value " + r.to_string() + " is not a half-integer");
        return HalfInt(r.den() == 1 ? detail::checked_mul(r.num(), 2) : r.num());
    }

    constexpr std::int64_t twice_value() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    Rational to_rational() const { return Rational(twice_, 2); }

    constexpr HalfInt operator-() const noexcept { return HalfInt(-twice_); }
    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(detail::checked_add(a.twice_, b.twice_)); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return a + (-b); }
    friend HalfInt operator*(HalfInt a, std::int64_t s) { return HalfInt(detail::checked_mul(a.twice_, s)); }
    friend HalfInt operator*(std::int64_t s, HalfInt a) { return a * s; }
    HalfInt& operator+=(HalfInt o) { return *this = *this + o; }
    HalfInt& operator-=(HalfInt o) { return *this = *this - o; }

    friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(HalfInt, HalfInt) noexcept = default;

    operator Rational() const { return to_rational(); }  // NOLINT(implicit)

    /// "p/2" for odd twice-values, the plain integer otherwise.
    std::string to_string() const {
        return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
    }

    /// Accepts integer literals and "p/2"; any other denominator is a domain error.
    static HalfInt parse(std::string_view s) { return from_rational(Rational::parse(s)); }

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

private:
    constexpr explicit HalfInt(std::int64_t twice) noexcept : twice_(twice) {}
    std::int64_t twice_ = 0;
};

}  // namespace oddortho
