#include <random>

#include "doctest.h"

#include "core/rational.hpp"

using ratknot::Error;
using ratknot::Rational;

TEST_CASE("reduction produces the unique normal form") {
    CHECK(Rational::reduced(-4, -6) == Rational::reduced(2, 3));
    CHECK(Rational::reduced(-4, -6).num() == 2);
    CHECK(Rational::reduced(-4, -6).den() == 3);
    CHECK(Rational::reduced(0, 5) == Rational(0));
    CHECK(Rational::reduced(0, 5).den() == 1);
    CHECK(Rational::reduced(6, 4) == Rational::reduced(3, 2));
    CHECK(Rational::reduced(5, -10).str() == "-1/2");
    CHECK_THROWS_AS(Rational::reduced(1, 0), Error);
}

TEST_CASE("parse and format round-trip") {
    CHECK(Rational::parse("-7/5").str() == "-7/5");
    CHECK(Rational::parse("3").str() == "3/1");
    CHECK(Rational::parse("6/4") == Rational::reduced(3, 2));
    CHECK(Rational::parse("-0/9") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse("1 /2"), Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("arithmetic matches hand-computed values") {
    CHECK(Rational::reduced(1, 2) + Rational::reduced(1, 3) == Rational::reduced(5, 6));
    CHECK(Rational::reduced(-4, 5) - Rational::reduced(3, 5) == Rational::reduced(-7, 5));
    CHECK(Rational::reduced(2, 3) * Rational::reduced(9, 4) == Rational::reduced(3, 2));
    CHECK(Rational::reduced(1, 3) / Rational::reduced(2, 9) == Rational::reduced(3, 2));
    CHECK(-Rational::reduced(1, 2) == Rational::reduced(-1, 2));
    CHECK(Rational::reduced(-7, 5).abs() == Rational::reduced(7, 5));
    CHECK(Rational::reduced(1, 3) < Rational::reduced(1, 2));
    CHECK(Rational::reduced(-1, 2) < Rational::reduced(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("field laws hold exactly on random triples") {
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<int64_t> num(-50, 50);
    std::uniform_int_distribution<int64_t> den(1, 50);
    for (int i = 0; i < 2000; ++i) {
        Rational a = Rational::reduced(num(rng), den(rng));
        Rational b = Rational::reduced(num(rng), den(rng));
        Rational c = Rational::reduced(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a * b / b == a);
    }
}

TEST_CASE("egcd returns the stated coefficients") {
    ratknot::BezoutTriple t = ratknot::egcd(5, 2);
    CHECK(t.g == 1);
    CHECK(t.x == 1);
    CHECK(t.y == -2);
    CHECK(5 * t.x + 2 * t.y == t.g);

    t = ratknot::egcd(0, 7);
    CHECK(t.g == 7);
    CHECK(t.x == 0);
    CHECK(t.y == 1);

    t = ratknot::egcd(12, 8);
    CHECK(t.g == 4);
    CHECK(12 * t.x + 8 * t.y == 4);
}

TEST_CASE("egcd satisfies the Bezout identity on random inputs") {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_int_distribution<int64_t> dist(-100000, 100000);
    for (int i = 0; i < 5000; ++i) {
        int64_t a = dist(rng), b = dist(rng);
        ratknot::BezoutTriple t = ratknot::egcd(a, b);
        CHECK(t.g >= 0);
        CHECK(a * t.x + b * t.y == t.g);
        if (t.g != 0) {
            CHECK(a % t.g == 0);
            CHECK(b % t.g == 0);
        } else {
            CHECK(a == 0);
            CHECK(b == 0);
        }
    }
}

TEST_CASE("overflow aborts loudly instead of wrapping") {
    int64_t big = std::numeric_limits<int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), Error);
    CHECK_THROWS_AS(Rational(big) * Rational(2), Error);
    CHECK_THROWS_AS(-Rational::reduced(std::numeric_limits<int64_t>::min(), 1),
                    Error);
}
