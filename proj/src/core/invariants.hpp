#pragma once

#include <cstdint>

#include "core/rational.hpp"

namespace ratknot {

// Homological footprint of a rational Seifert surface: the surface has
// order r along the knot, meets the boundary torus in an (r, s)-curve for
// a fixed framing, and has gcd(r, s) boundary components. Changing the
// framing by n maps s to s + n*r; no ambient embedding is represented.
struct SeifertData {
    int64_t order;           // r >= 1
    int64_t boundary_slope;  // s, relative to the fixed framing
    int64_t euler_char;      // chi of the surface
    int64_t multiplicity;    // gcd(order, boundary_slope), gcd(r, 0) = r

    static SeifertData make(int64_t order, int64_t boundary_slope,
                            int64_t euler_char);
};

// Signed tally of a generic characteristic foliation.
struct SingularityCounts {
    int64_t e_plus = 0;
    int64_t e_minus = 0;
    int64_t h_plus = 0;
    int64_t h_minus = 0;

    static SingularityCounts make(int64_t e_plus, int64_t e_minus,
                                  int64_t h_plus, int64_t h_minus);

    friend bool operator==(const SingularityCounts&,
                           const SingularityCounts&) = default;
};

// Legendrian bookkeeping: r*tb and r*rot are integers.
struct LegendrianRecord {
    SeifertData seifert;
    Rational tb;
    Rational rot;

    static LegendrianRecord make(SeifertData seifert, Rational tb, Rational rot);
};

// Transverse bookkeeping: r*sl is an integer.
struct TransverseRecord {
    SeifertData seifert;
    Rational sl;

    static TransverseRecord make(SeifertData seifert, Rational sl);
};

// Linking number of a knot of order r with its push-off along framing f,
// relative to the framing in which the Seifert cable is the (r, s)-curve:
// (r*f - s)/r. Dropping the framing by one drops the value by one.
Rational lk_pushoff(int64_t order, int64_t slope, int64_t framing);

// ((e_- - h_-) - (e_+ - h_+)) / r.
Rational sl_from_counts(int64_t order, const SingularityCounts& counts);

// chi == (e_+ - h_+) + (e_- - h_-).
bool poincare_hopf_check(int64_t euler_char, const SingularityCounts& counts);

// r*sl + chi; equals 2(e_- - h_-) for counts satisfying both identities,
// so the value is <= 0 exactly when the transverse Bennequin bound holds.
// Errors unless r*sl is an integer.
Rational sl_defect(int64_t order, const Rational& sl, int64_t euler_char);

// -chi/r - sl; nonnegative iff the transverse Bennequin bound holds, and
// zero exactly on the r*sl = -chi sharpness locus.
Rational bennequin_slack(const Rational& sl, int64_t euler_char, int64_t order);

// tb + |rot| <= -chi/r.
bool bennequin_legendrian(const Rational& tb, const Rational& rot,
                          int64_t euler_char, int64_t order);

// sl = tb - rot; Seifert data carried over unchanged.
TransverseRecord transverse_pushoff(const LegendrianRecord& record);

// sign > 0: (tb - 1, rot + 1); sign < 0: (tb - 1, rot - 1).
LegendrianRecord legendrian_stabilize(const LegendrianRecord& record, int sign);

// sl drops by exactly 2.
TransverseRecord transverse_stabilize(const TransverseRecord& record);

}  // namespace ratknot
