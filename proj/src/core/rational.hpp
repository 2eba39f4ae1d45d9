#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "core/checked_int.hpp"
#include "core/error.hpp"

namespace ratknot {

// Exact fraction in reduced normal form: denominator > 0 and
// gcd(|num|, den) == 1 at all times. Values are immutable; every
// operation returns a fresh reduced value and no rounding ever occurs.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent

    // Unique reduced representative of n/d. Errors on d == 0.
    static Rational reduced(int64_t n, int64_t d);

    // Accepts "n" and "n/d" (optionally "-n/d"), whitespace-free.
    static Rational parse(std::string_view text);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_zero() const { return num_ == 0; }

    Rational abs() const { return Rational(checked_abs(num_), den_); }

    // Serialized as "n/d" with d > 0; integers are emitted as "n/1".
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) {
        return Rational(checked_neg(a.num_), a.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Reduced forms are unique, so ordering compares cross products; the
    // wide intermediate keeps comparisons total even near the int64 edge.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational(int64_t n, int64_t d) : num_(n), den_(d) {}  // already reduced

    int64_t num_;
    int64_t den_;
};

}  // namespace ratknot
