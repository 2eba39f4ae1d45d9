#pragma once

#include <cstdint>
#include <span>

#include "core/invariants.hpp"
#include "core/rational.hpp"

namespace ratknot {

// Cabling coefficients (p, q): the curve(s) in class p*lambda + q*mu on the
// boundary torus, of slope q/p. p = 0, +1, -1 are excluded. The slope must
// differ from the Seifert slope s/r; that check lives in the operations
// that know (r, s).
struct CableParams {
    int64_t p;
    int64_t q;

    static CableParams make(int64_t p, int64_t q);
};

// Pieces gluing up the fiber of a cable: copies of the old fiber, meridian
// disks, and half-twisted bands joining them.
struct AssemblyCount {
    int64_t surface_copies;  // |p| / gcd(p,r)
    int64_t meridian_disks;  // |rq - sp| / gcd(p,r)
    int64_t bands;           // |p (rq - sp)| / gcd(p,r)
};

struct AssembledFiber {
    int64_t chi;
    SingularityCounts counts;
};

// Per-component numbers after an (r, l)-resolution.
struct Resolution {
    int64_t components;  // gcd(r, l)
    int64_t order;       // always 1
    int64_t multiplicity;  // always 1
    int64_t chi_delta;   // |s - l| * (1 - r), one copy of the old fiber
    bool positive;       // l > s
};

AssemblyCount assembly_counts(int64_t order, int64_t slope, const CableParams& c);

// (|p| chi_old + |ps - qr| (1 - |p|)) / gcd(p, r); always integral.
int64_t cable_chi(int64_t chi_old, int64_t order, int64_t slope,
                  const CableParams& c);

// r / gcd(p, r).
int64_t cable_order(int64_t order, int64_t p);

// gcd( r/gcd(p,r), |p (rq - sp)| / (gcd(p,r) gcd(p,q)) ).
int64_t cable_multiplicity(int64_t order, int64_t slope, const CableParams& c);

// q/p > s/r as exact rationals.
bool is_positive_cable(int64_t order, int64_t slope, const CableParams& c);

// (|p| r sl + |rq - sp| (|p| - 1)) / gcd(r, p), the self-linking of a
// positive transverse cable with respect to the assembled fiber. Refuses
// non-positive cables.
Rational cable_sl(const Rational& sl, int64_t order, int64_t slope,
                  const CableParams& c);

// Counts the assembled fiber piece by piece: each copy of the old surface
// keeps its singularities, each meridian disk contributes one positive
// elliptic point and each band one positive hyperbolic point. Serves as the
// independent oracle for cable_chi and cable_sl.
AssembledFiber assembly_oracle(int64_t chi_old, const SingularityCounts& counts_old,
                               int64_t order, int64_t slope, const CableParams& c);

// (r, l)-cable of an order-r binding component; the new components are
// honest (order and multiplicity 1) binding components.
Resolution integral_resolution(int64_t order, int64_t slope, int64_t coeff);

// chi + (1 - r) * sum |s_i - q_i| over the components of a uniform surface.
int64_t link_resolution_chi(int64_t chi, int64_t order,
                            std::span<const int64_t> slopes,
                            std::span<const int64_t> coeffs);

// r sl + (r - 1) * sum |s_i - q_i|; requires a positive resolution
// (q_i > s_i for every i).
Rational link_resolution_sl(const Rational& sl, int64_t order,
                            std::span<const int64_t> slopes,
                            std::span<const int64_t> coeffs);

}  // namespace ratknot
