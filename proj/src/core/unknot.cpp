#include "core/unknot.hpp"

#include <algorithm>
#include <string>

namespace ratknot {

std::vector<UnknotType> classify_unknots(const LensSpace& lens) {
    if (lens.p == 2) return {UnknotType{Core::k1, false}};
    if (lens.q == 1 || lens.q == lens.p - 1)
        return {UnknotType{Core::k1, false}, UnknotType{Core::k1, true}};
    return {UnknotType{Core::k0, false}, UnknotType{Core::k0, true},
            UnknotType{Core::k1, false}, UnknotType{Core::k1, true}};
}

Rational max_tb(const LensSpace& lens) {
    DualParams dual = dual_params(lens);
    return Rational::reduced(checked_neg(dual.p_dual), lens.p);
}

std::vector<int64_t> euler_classes(int64_t p) {
    if (p < 3 || p % 2 == 0)
        fail(errc::unsupported,
             "Euler class range is implemented for odd p >= 3, got p=" +
                 std::to_string(p));
    std::vector<int64_t> classes;
    for (int64_t k = 0; k <= p - 2; ++k) classes.push_back(p - 2 - 2 * k);
    return classes;
}

namespace {

void require_euler_class(int64_t p, int64_t l) {
    std::vector<int64_t> classes = euler_classes(p);
    if (std::find(classes.begin(), classes.end(), l) == classes.end())
        fail(errc::invalid_argument,
             "l=" + std::to_string(l) + " is not an Euler class evaluation for L(" +
                 std::to_string(p) + ",1)");
}

void require_depth(int64_t depth) {
    if (depth < 0)
        fail(errc::invalid_argument, "depth must be nonnegative");
}

}  // namespace

std::vector<MountainPoint> mountain_range(int64_t p, int64_t l, Orient orient,
                                          int64_t depth) {
    require_euler_class(p, l);
    require_depth(depth);
    int64_t signed_l = orient == Orient::k1 ? l : checked_neg(l);
    Rational tb_peak = Rational::reduced(checked_neg(p - 1), p);
    Rational rot_peak = Rational::reduced(signed_l, p);
    std::vector<MountainPoint> points;
    for (int64_t k = 0; k <= depth; ++k) {
        for (int64_t m = 0; m <= k; ++m) {
            points.push_back(MountainPoint{
                tb_peak - Rational(k),
                rot_peak + Rational(checked_sub(k, checked_mul(2, m))), k, m});
        }
    }
    return points;
}

std::vector<Rational> sl_spectrum(int64_t p, int64_t l, Orient orient,
                                  int64_t depth) {
    require_euler_class(p, l);
    require_depth(depth);
    int64_t signed_l = orient == Orient::k1 ? l : checked_neg(l);
    // tb - rot at the peak; transverse stabilization steps down by 2.
    Rational top = Rational::reduced(
        checked_neg(checked_add(checked_sub(p, 1), signed_l)), p);
    std::vector<Rational> values;
    for (int64_t k = 0; k <= depth; ++k)
        values.push_back(top - Rational(checked_mul(2, k)));
    return values;
}

}  // namespace ratknot
