#include <numeric>

#include "doctest.h"

#include "core/lens.hpp"

using ratknot::DualParams;
using ratknot::Error;
using ratknot::LensSpace;
using ratknot::Rational;

TEST_CASE("lens space validation") {
    CHECK_NOTHROW(LensSpace::make(5, 2));
    CHECK_THROWS_AS(LensSpace::make(5, 5), Error);
    CHECK_THROWS_AS(LensSpace::make(4, 2), Error);
    CHECK_THROWS_AS(LensSpace::make(5, 0), Error);
    CHECK_THROWS_AS(LensSpace::make(2, 3), Error);
}

TEST_CASE("expansion coefficients evaluate back to -p/q") {
    CHECK(ratknot::ncf_expand(3, 1) == std::vector<int64_t>{-3});
    CHECK(ratknot::ncf_expand(5, 2) == std::vector<int64_t>{-3, -2});
    CHECK(ratknot::ncf_expand(7, 3) == std::vector<int64_t>{-3, -2, -2});
    CHECK(ratknot::ncf_evaluate(ratknot::ncf_expand(3, 1)) == Rational(-3));
    CHECK(ratknot::ncf_evaluate(ratknot::ncf_expand(5, 2)) ==
          Rational::reduced(-5, 2));
    CHECK(ratknot::ncf_evaluate(ratknot::ncf_expand(7, 3)) ==
          Rational::reduced(-7, 3));
}

TEST_CASE("nested fraction evaluation") {
    CHECK(ratknot::ncf_evaluate(std::vector<int64_t>{-3}) == Rational(-3));
    CHECK(ratknot::ncf_evaluate(std::vector<int64_t>{-3, -2}) ==
          Rational::reduced(-5, 2));
    CHECK(ratknot::ncf_evaluate(std::vector<int64_t>{-2, -2, -2}) ==
          Rational::reduced(-4, 3));
    CHECK_THROWS_AS(ratknot::ncf_evaluate(std::vector<int64_t>{}), Error);
    // 1 - 1/1 makes the inner value hit zero under the next division.
    CHECK_THROWS_AS(ratknot::ncf_evaluate(std::vector<int64_t>{-2, 1, 1}), Error);
}

TEST_CASE("dual parameters on the worked examples") {
    DualParams d = ratknot::dual_params(LensSpace::make(5, 1));
    CHECK(d.p_dual == 4);
    CHECK(d.q_dual == 1);
    d = ratknot::dual_params(LensSpace::make(5, 2));
    CHECK(d.p_dual == 2);
    CHECK(d.q_dual == 1);
    d = ratknot::dual_params(LensSpace::make(5, 3));
    CHECK(d.p_dual == 3);
    CHECK(d.q_dual == 2);
    d = ratknot::dual_params(LensSpace::make(2, 1));
    CHECK(d.p_dual == 1);
    CHECK(d.q_dual == 1);
}

TEST_CASE("expansion and dual invariants over a sweep") {
    for (int64_t p = 2; p <= 200; ++p) {
        for (int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace lens = LensSpace::make(p, q);
            std::vector<int64_t> coeffs = ratknot::ncf_expand(p, q);
            CHECK(coeffs.size() <= static_cast<size_t>(p));
            for (int64_t a : coeffs) CHECK(a <= -2);
            CHECK(ratknot::ncf_evaluate(coeffs) == Rational::reduced(-p, q));

            DualParams d = ratknot::dual_params(lens);
            CHECK(d.p_dual > 0);
            CHECK(d.p_dual < p);
            CHECK(d.q_dual > 0);
            CHECK(d.q_dual <= q);
            CHECK(p * d.q_dual - d.p_dual * q == 1);
            CHECK((d.p_dual * q) % p == p - 1);
            if (q == 1) CHECK(d.p_dual == p - 1);
        }
    }
}
