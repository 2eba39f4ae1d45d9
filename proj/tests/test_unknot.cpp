#include <algorithm>
#include <set>

#include "doctest.h"

#include "core/invariants.hpp"
#include "core/unknot.hpp"

using ratknot::Core;
using ratknot::Error;
using ratknot::LegendrianRecord;
using ratknot::LensSpace;
using ratknot::MountainPoint;
using ratknot::Orient;
using ratknot::Rational;
using ratknot::SeifertData;
using ratknot::UnknotType;

namespace {

using PointSet = std::set<std::pair<Rational, Rational>>;

PointSet as_set(const std::vector<MountainPoint>& points) {
    PointSet set;
    for (const MountainPoint& point : points) set.insert({point.tb, point.rot});
    return set;
}

// Independent construction: close the peak record under both Legendrian
// stabilizations, layer by layer.
PointSet closure_from_peak(int64_t p, int64_t l, Orient orient, int64_t depth) {
    int64_t signed_l = orient == Orient::k1 ? l : -l;
    SeifertData disk = SeifertData::make(p, 1, 1);
    LegendrianRecord peak = LegendrianRecord::make(
        disk, Rational::reduced(-(p - 1), p), Rational::reduced(signed_l, p));
    PointSet set{{peak.tb, peak.rot}};
    std::vector<LegendrianRecord> layer{peak};
    for (int64_t k = 0; k < depth; ++k) {
        std::vector<LegendrianRecord> next;
        for (const LegendrianRecord& rec : layer)
            for (int sign : {+1, -1}) {
                LegendrianRecord stabilized = ratknot::legendrian_stabilize(rec, sign);
                if (set.insert({stabilized.tb, stabilized.rot}).second)
                    next.push_back(stabilized);
            }
        layer = std::move(next);
    }
    return set;
}

}  // namespace

TEST_CASE("rational unknot types per lens space") {
    auto types = ratknot::classify_unknots(LensSpace::make(2, 1));
    CHECK(types == std::vector<UnknotType>{{Core::k1, false}});

    types = ratknot::classify_unknots(LensSpace::make(5, 1));
    CHECK(types == std::vector<UnknotType>{{Core::k1, false}, {Core::k1, true}});

    types = ratknot::classify_unknots(LensSpace::make(5, 4));
    CHECK(types == std::vector<UnknotType>{{Core::k1, false}, {Core::k1, true}});

    types = ratknot::classify_unknots(LensSpace::make(5, 2));
    CHECK(types == std::vector<UnknotType>{{Core::k0, false},
                                           {Core::k0, true},
                                           {Core::k1, false},
                                           {Core::k1, true}});
}

TEST_CASE("maximal Thurston-Bennequin invariant is -p'/p") {
    CHECK(ratknot::max_tb(LensSpace::make(5, 1)) == Rational::reduced(-4, 5));
    CHECK(ratknot::max_tb(LensSpace::make(5, 2)) == Rational::reduced(-2, 5));
    CHECK(ratknot::max_tb(LensSpace::make(2, 1)) == Rational::reduced(-1, 2));
}

TEST_CASE("Euler class evaluations on L(p,1)") {
    CHECK(ratknot::euler_classes(5) == std::vector<int64_t>{3, 1, -1, -3});
    CHECK(ratknot::euler_classes(3) == std::vector<int64_t>{1, -1});
    CHECK_THROWS_AS(ratknot::euler_classes(4), Error);
    CHECK_THROWS_AS(ratknot::euler_classes(1), Error);
    for (int64_t p : {3, 5, 7, 9, 11})
        for (int64_t l : ratknot::euler_classes(p)) CHECK(l != 0);
}

TEST_CASE("mountain range peaks and first layer") {
    auto points = ratknot::mountain_range(5, 3, Orient::k1, 0);
    REQUIRE(points.size() == 1);
    CHECK(points[0].tb == Rational::reduced(-4, 5));
    CHECK(points[0].rot == Rational::reduced(3, 5));

    points = ratknot::mountain_range(5, 3, Orient::neg_k1, 0);
    REQUIRE(points.size() == 1);
    CHECK(points[0].rot == Rational::reduced(-3, 5));

    points = ratknot::mountain_range(5, 3, Orient::k1, 1);
    PointSet expected{{Rational::reduced(-4, 5), Rational::reduced(3, 5)},
                      {Rational::reduced(-9, 5), Rational::reduced(8, 5)},
                      {Rational::reduced(-9, 5), Rational::reduced(-2, 5)}};
    CHECK(as_set(points) == expected);

    CHECK_THROWS_AS(ratknot::mountain_range(5, 2, Orient::k1, 1), Error);
    CHECK_THROWS_AS(ratknot::mountain_range(5, 5, Orient::k1, 1), Error);
    CHECK_THROWS_AS(ratknot::mountain_range(6, 1, Orient::k1, 1), Error);
    CHECK_THROWS_AS(ratknot::mountain_range(5, 3, Orient::k1, -1), Error);
}

TEST_CASE("closed form equals the stabilization closure") {
    for (int64_t p : {3, 5, 7}) {
        for (int64_t l : ratknot::euler_classes(p)) {
            for (Orient orient : {Orient::k1, Orient::neg_k1}) {
                for (int64_t depth = 0; depth <= 4; ++depth) {
                    CHECK(as_set(ratknot::mountain_range(p, l, orient, depth)) ==
                          closure_from_peak(p, l, orient, depth));
                }
            }
        }
    }
}

TEST_CASE("every mountain point obeys the Bennequin bound") {
    for (int64_t p : {3, 5, 7, 9}) {
        for (int64_t l : ratknot::euler_classes(p)) {
            for (Orient orient : {Orient::k1, Orient::neg_k1}) {
                for (const MountainPoint& point :
                     ratknot::mountain_range(p, l, orient, 4)) {
                    CHECK(ratknot::bennequin_legendrian(point.tb, point.rot, 1, p));
                    bool sharp = point.tb + point.rot.abs() ==
                                 Rational::reduced(-1, p);
                    // Sharp exactly at the extreme |rot| of each layer when
                    // |l| = p-2.
                    bool extreme =
                        (orient == Orient::k1 ? l : -l) > 0 ? point.m == 0
                                                            : point.m == point.k;
                    CHECK(sharp == (std::abs(l) == p - 2 && extreme));
                }
            }
        }
    }
}

TEST_CASE("one unit above the maximum violates the bound") {
    for (int64_t p : {3, 5, 7}) {
        Rational over = ratknot::max_tb(LensSpace::make(p, 1)) + Rational(1);
        for (int64_t l : ratknot::euler_classes(p))
            for (const MountainPoint& point :
                 ratknot::mountain_range(p, l, Orient::k1, 2))
                CHECK_FALSE(ratknot::bennequin_legendrian(over, point.rot, 1, p));
    }
}

TEST_CASE("orientation reversal negates rotation numbers") {
    for (int64_t p : {3, 5, 7})
        for (int64_t l : ratknot::euler_classes(p)) {
            auto plus = ratknot::mountain_range(p, l, Orient::k1, 3);
            auto minus = ratknot::mountain_range(p, l, Orient::neg_k1, 3);
            PointSet negated;
            for (const MountainPoint& point : minus)
                negated.insert({point.tb, -point.rot});
            CHECK(as_set(plus) == negated);
        }
}

TEST_CASE("self-linking spectrum tops and steps") {
    auto values = ratknot::sl_spectrum(5, 3, Orient::k1, 0);
    CHECK(values == std::vector<Rational>{Rational::reduced(-7, 5)});

    values = ratknot::sl_spectrum(5, 3, Orient::neg_k1, 0);
    CHECK(values == std::vector<Rational>{Rational::reduced(-1, 5)});

    // Each transverse stabilization drops the value by two.
    values = ratknot::sl_spectrum(5, 3, Orient::k1, 2);
    CHECK(values == std::vector<Rational>{Rational::reduced(-7, 5),
                                          Rational::reduced(-17, 5),
                                          Rational::reduced(-27, 5)});

    // l = 1 tops out at an integer value.
    values = ratknot::sl_spectrum(5, 1, Orient::k1, 1);
    CHECK(values == std::vector<Rational>{Rational(-1), Rational(-3)});
}

TEST_CASE("spectrum equals push-offs of the positively stabilized peak") {
    for (int64_t p : {3, 5, 7, 9}) {
        for (int64_t l : ratknot::euler_classes(p)) {
            for (Orient orient : {Orient::k1, Orient::neg_k1}) {
                int64_t depth = 5;
                auto spectrum = ratknot::sl_spectrum(p, l, orient, depth);
                SeifertData disk = SeifertData::make(p, 1, 1);
                LegendrianRecord rec = LegendrianRecord::make(
                    disk, Rational::reduced(-(p - 1), p),
                    Rational::reduced(orient == Orient::k1 ? l : -l, p));
                for (int64_t k = 0; k <= depth; ++k) {
                    CHECK(spectrum[k] == ratknot::transverse_pushoff(rec).sl);
                    rec = ratknot::legendrian_stabilize(rec, +1);
                }
                // Every spectrum value keeps r*sl + chi even, as any value
                // computed from singularity counts must be.
                for (const Rational& sl : spectrum) {
                    Rational defect = ratknot::sl_defect(p, sl, 1);
                    CHECK(defect.is_integer());
                    CHECK(defect.num() % 2 == 0);
                }
            }
        }
    }
}
