#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "core/error.hpp"

namespace ratknot {

// Every integer in the library is a checked int64_t: the inputs we care
// about are tiny, so a wrap can only mean a programming error or a
// hostile input, and either must stop the computation.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::overflow, "integer overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        fail(errc::overflow, "integer overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::overflow, "integer overflow in multiplication");
    return r;
}

inline int64_t checked_neg(int64_t a) {
    if (a == std::numeric_limits<int64_t>::min())
        fail(errc::overflow, "integer overflow in negation");
    return -a;
}

inline int64_t checked_abs(int64_t a) { return a < 0 ? checked_neg(a) : a; }

inline int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

struct BezoutTriple {
    int64_t g;  // gcd(a, b), always >= 0
    int64_t x;
    int64_t y;  // a*x + b*y == g
};

// Extended Euclid; the coefficients are the classical ones produced by the
// iterative remainder sequence.
BezoutTriple egcd(int64_t a, int64_t b);

}  // namespace ratknot
