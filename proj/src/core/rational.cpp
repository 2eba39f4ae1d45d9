#include "core/rational.hpp"

#include <charconv>

namespace ratknot {

BezoutTriple egcd(int64_t a, int64_t b) {
    int64_t old_r = a, r = b;
    int64_t old_x = 1, x = 0;
    int64_t old_y = 0, y = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_x, checked_mul(q, x));
        old_x = x;
        x = tmp;
        tmp = checked_sub(old_y, checked_mul(q, y));
        old_y = y;
        y = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_x = checked_neg(old_x);
        old_y = checked_neg(old_y);
    }
    return BezoutTriple{old_r, old_x, old_y};
}

Rational Rational::reduced(int64_t n, int64_t d) {
    if (d == 0) fail(errc::invalid_argument, "rational with zero denominator");
    if (n == 0) return Rational(0, 1);
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    int64_t g = gcd64(n, d);
    return Rational(n / g, d / g);
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        fail(errc::parse, "malformed rational \"" + std::string(text) + "\"");
    };
    const char* begin = text.data();
    const char* end = begin + text.size();
    int64_t n = 0;
    auto [ptr, ec] = std::from_chars(begin, end, n);
    if (ec != std::errc()) bad();
    if (ptr == end) return Rational(n);
    if (*ptr != '/') bad();
    ++ptr;
    if (ptr == end || *ptr == '-' || *ptr == '+') bad();
    int64_t d = 0;
    auto [ptr2, ec2] = std::from_chars(ptr, end, d);
    if (ec2 != std::errc() || ptr2 != end) bad();
    return reduced(n, d);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    int64_t n = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
    return Rational::reduced(n, checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    int64_t n = checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
    return Rational::reduced(n, checked_mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::reduced(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::domain, "division of rational by zero");
    return Rational::reduced(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

}  // namespace ratknot
