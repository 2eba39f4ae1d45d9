#include "core/invariants.hpp"

#include <string>

namespace ratknot {

namespace {

void require_order(int64_t order) {
    if (order < 1)
        fail(errc::invalid_argument,
             "order must be >= 1, got " + std::to_string(order));
}

Rational require_integral_multiple(int64_t order, const Rational& value,
                                   const char* name) {
    Rational scaled = Rational(order) * value;
    if (!scaled.is_integer())
        fail(errc::invalid_argument,
             std::string(name) + " = " + value.str() +
                 " is not an integer multiple of 1/" + std::to_string(order));
    return scaled;
}

}  // namespace

SeifertData SeifertData::make(int64_t order, int64_t boundary_slope,
                              int64_t euler_char) {
    require_order(order);
    return SeifertData{order, boundary_slope, euler_char,
                       gcd64(order, boundary_slope)};
}

SingularityCounts SingularityCounts::make(int64_t e_plus, int64_t e_minus,
                                          int64_t h_plus, int64_t h_minus) {
    if (e_plus < 0 || e_minus < 0 || h_plus < 0 || h_minus < 0)
        fail(errc::invalid_argument, "singularity counts must be nonnegative");
    return SingularityCounts{e_plus, e_minus, h_plus, h_minus};
}

LegendrianRecord LegendrianRecord::make(SeifertData seifert, Rational tb,
                                        Rational rot) {
    require_integral_multiple(seifert.order, tb, "tb");
    require_integral_multiple(seifert.order, rot, "rot");
    return LegendrianRecord{seifert, tb, rot};
}

TransverseRecord TransverseRecord::make(SeifertData seifert, Rational sl) {
    require_integral_multiple(seifert.order, sl, "sl");
    return TransverseRecord{seifert, sl};
}

Rational lk_pushoff(int64_t order, int64_t slope, int64_t framing) {
    require_order(order);
    return Rational::reduced(checked_sub(checked_mul(order, framing), slope),
                             order);
}

Rational sl_from_counts(int64_t order, const SingularityCounts& counts) {
    require_order(order);
    int64_t n = checked_sub(checked_sub(counts.e_minus, counts.h_minus),
                            checked_sub(counts.e_plus, counts.h_plus));
    return Rational::reduced(n, order);
}

bool poincare_hopf_check(int64_t euler_char, const SingularityCounts& counts) {
    int64_t sum = checked_add(checked_sub(counts.e_plus, counts.h_plus),
                              checked_sub(counts.e_minus, counts.h_minus));
    return sum == euler_char;
}

Rational sl_defect(int64_t order, const Rational& sl, int64_t euler_char) {
    require_order(order);
    Rational scaled = require_integral_multiple(order, sl, "sl");
    return scaled + Rational(euler_char);
}

Rational bennequin_slack(const Rational& sl, int64_t euler_char, int64_t order) {
    require_order(order);
    return Rational::reduced(checked_neg(euler_char), order) - sl;
}

bool bennequin_legendrian(const Rational& tb, const Rational& rot,
                          int64_t euler_char, int64_t order) {
    require_order(order);
    return tb + rot.abs() <= Rational::reduced(checked_neg(euler_char), order);
}

TransverseRecord transverse_pushoff(const LegendrianRecord& record) {
    return TransverseRecord{record.seifert, record.tb - record.rot};
}

LegendrianRecord legendrian_stabilize(const LegendrianRecord& record, int sign) {
    if (sign == 0) fail(errc::invalid_argument, "stabilization sign must be + or -");
    Rational delta = sign > 0 ? Rational(1) : Rational(-1);
    return LegendrianRecord{record.seifert, record.tb - Rational(1),
                            record.rot + delta};
}

TransverseRecord transverse_stabilize(const TransverseRecord& record) {
    return TransverseRecord{record.seifert, record.sl - Rational(2)};
}

}  // namespace ratknot
