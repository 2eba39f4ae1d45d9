#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/rational.hpp"

namespace ratknot {

// L(p,q) with the convention p > q > 0 and gcd(p,q) = 1.
struct LensSpace {
    int64_t p;
    int64_t q;

    static LensSpace make(int64_t p, int64_t q);
};

// (p', q') with p > p' > 0, q >= q' > 0, p*q' - p'*q = 1 and
// p'*q = -1 (mod p).
struct DualParams {
    int64_t p_dual;
    int64_t q_dual;
};

// Coefficients [a_0, ..., a_k], each a_i <= -2, of the continued fraction
//   a_0 - 1/(a_1 - 1/(... - 1/a_k)) = -p/q.
std::vector<int64_t> ncf_expand(int64_t p, int64_t q);

// Evaluates the nested fraction exactly. Errors on an empty list or when an
// intermediate denominator hits zero.
Rational ncf_evaluate(std::span<const int64_t> coeffs);

// Bumps the last coefficient by one and evaluates; the telescoped value is
// reduced to the unique (p', q'). The result is cross-checked against the
// modular characterization p'*q = -1 (mod p).
DualParams dual_params(const LensSpace& lens);

}  // namespace ratknot
