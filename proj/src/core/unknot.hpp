#pragma once

#include <cstdint>
#include <vector>

#include "core/lens.hpp"
#include "core/rational.hpp"

namespace ratknot {

// Oriented cores of the two Heegaard solid tori.
enum class Core { k0, k1 };

struct UnknotType {
    Core core;
    bool reversed;  // orientation

    friend bool operator==(const UnknotType&, const UnknotType&) = default;
};

enum class Orient { k1, neg_k1 };

// One realized (tb, rot) value: tb sits k stabilizations below the peak and
// rot = rot_peak + k - 2m for some 0 <= m <= k.
struct MountainPoint {
    Rational tb;
    Rational rot;
    int64_t k;
    int64_t m;

    friend bool operator==(const MountainPoint&, const MountainPoint&) = default;
};

// Rational unknot types up to homeomorphism isotopic to the identity:
// {K1} for p = 2, {K1, -K1} when q = 1 or p-1, all four cores otherwise.
std::vector<UnknotType> classify_unknots(const LensSpace& lens);

// Maximum rational Thurston-Bennequin invariant of K1 and -K1: -p'/p.
Rational max_tb(const LensSpace& lens);

// Euler class evaluations realized by tight structures on L(p,1), p odd:
// {p-2-2k : k = 0..p-2}, in descending order.
std::vector<int64_t> euler_classes(int64_t p);

// All (tb, rot) pairs within `depth` stabilizations of the peak of K1
// (or -K1) in the tight structure labeled l on L(p,1); agrees with the
// stabilization closure of the peak. Ordered by k, then by m.
std::vector<MountainPoint> mountain_range(int64_t p, int64_t l, Orient orient,
                                          int64_t depth);

// Self-linking numbers realized by transverse representatives, from the
// push-off of the peak down `depth` transverse stabilizations: each step
// drops the value by exactly 2.
std::vector<Rational> sl_spectrum(int64_t p, int64_t l, Orient orient,
                                  int64_t depth);

}  // namespace ratknot
