#include "core/lens.hpp"

#include <string>

namespace ratknot {

LensSpace LensSpace::make(int64_t p, int64_t q) {
    if (!(p > q && q > 0))
        fail(errc::invalid_argument,
             "lens space requires p > q > 0, got p=" + std::to_string(p) +
                 " q=" + std::to_string(q));
    if (gcd64(p, q) != 1)
        fail(errc::invalid_argument,
             "lens space requires gcd(p,q) = 1, got p=" + std::to_string(p) +
                 " q=" + std::to_string(q));
    return LensSpace{p, q};
}

std::vector<int64_t> ncf_expand(int64_t p, int64_t q) {
    LensSpace::make(p, q);
    // Ceiling-division Euclidean recursion on -n/d: emit -ceil(n/d) and
    // continue with (d, d*ceil(n/d) - n) until the remainder vanishes.
    std::vector<int64_t> coeffs;
    int64_t n = p, d = q;
    while (true) {
        int64_t a = (n + d - 1) / d;  // ceil for positive n, d
        coeffs.push_back(checked_neg(a));
        int64_t m = checked_sub(checked_mul(d, a), n);
        if (m == 0) break;
        n = d;
        d = m;
    }
    return coeffs;
}

Rational ncf_evaluate(std::span<const int64_t> coeffs) {
    if (coeffs.empty())
        fail(errc::invalid_argument, "empty continued fraction");
    Rational value(coeffs.back());
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        if (value.is_zero())
            fail(errc::domain, "zero intermediate denominator in continued fraction");
        value = Rational(coeffs[i]) - Rational(1) / value;
    }
    return value;
}

DualParams dual_params(const LensSpace& lens) {
    std::vector<int64_t> coeffs = ncf_expand(lens.p, lens.q);
    coeffs.back() = checked_add(coeffs.back(), 1);
    Rational value = ncf_evaluate(coeffs);  // equals -p'/q'
    int64_t p_dual = checked_neg(value.num());
    int64_t q_dual = value.den();
    // Two independent derivations guard the coefficient sign convention:
    // the bumped expansion must agree with the modular characterization.
    bool ok = p_dual > 0 && p_dual < lens.p && q_dual > 0 && q_dual <= lens.q;
    if (ok) {
        int64_t det = checked_sub(checked_mul(lens.p, q_dual),
                                  checked_mul(p_dual, lens.q));
        ok = det == 1;
    }
    if (ok) {
        int64_t residue = checked_mul(p_dual, lens.q) % lens.p;
        ok = residue == lens.p - 1;
    }
    if (!ok)
        fail(errc::domain, "dual parameter cross-check failed for L(" +
                               std::to_string(lens.p) + "," +
                               std::to_string(lens.q) + ")");
    return DualParams{p_dual, q_dual};
}

}  // namespace ratknot
