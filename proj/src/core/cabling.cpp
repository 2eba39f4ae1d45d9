#include "core/cabling.hpp"

#include <string>

namespace ratknot {

namespace {

void require_order(int64_t order) {
    if (order < 1)
        fail(errc::invalid_argument,
             "order must be >= 1, got " + std::to_string(order));
}

// (p, q) proportional to (r, s) over Q is exactly slope equality.
void require_slope_distinct(int64_t order, int64_t slope, const CableParams& c) {
    __int128 lhs = static_cast<__int128>(c.q) * order;
    __int128 rhs = static_cast<__int128>(slope) * c.p;
    if (lhs == rhs)
        fail(errc::invalid_argument,
             "cable slope q/p equals the Seifert slope s/r");
}

int64_t exact_div(int64_t n, int64_t d, const char* what) {
    if (n % d != 0) fail(errc::domain, std::string("non-integral ") + what);
    return n / d;
}

}  // namespace

CableParams CableParams::make(int64_t p, int64_t q) {
    if (p == 0 || p == 1 || p == -1)
        fail(errc::invalid_argument,
             "cable coefficient p must differ from 0 and +-1, got " +
                 std::to_string(p));
    return CableParams{p, q};
}

AssemblyCount assembly_counts(int64_t order, int64_t slope, const CableParams& c) {
    require_order(order);
    require_slope_distinct(order, slope, c);
    int64_t g = gcd64(c.p, order);
    int64_t rq_sp = checked_sub(checked_mul(order, c.q), checked_mul(slope, c.p));
    int64_t copies = checked_abs(c.p) / g;
    int64_t disks = checked_abs(rq_sp) / g;
    int64_t bands = checked_abs(checked_mul(c.p, rq_sp)) / g;
    return AssemblyCount{copies, disks, bands};
}

int64_t cable_chi(int64_t chi_old, int64_t order, int64_t slope,
                  const CableParams& c) {
    require_order(order);
    require_slope_distinct(order, slope, c);
    int64_t g = gcd64(c.p, order);
    int64_t abs_p = checked_abs(c.p);
    int64_t ps_qr = checked_sub(checked_mul(c.p, slope), checked_mul(c.q, order));
    int64_t n = checked_add(checked_mul(abs_p, chi_old),
                            checked_mul(checked_abs(ps_qr),
                                        checked_sub(1, abs_p)));
    return exact_div(n, g, "cable Euler characteristic");
}

int64_t cable_order(int64_t order, int64_t p) {
    require_order(order);
    if (p == 0) fail(errc::invalid_argument, "cable coefficient p must be nonzero");
    return order / gcd64(p, order);
}

int64_t cable_multiplicity(int64_t order, int64_t slope, const CableParams& c) {
    require_order(order);
    require_slope_distinct(order, slope, c);
    int64_t g = gcd64(c.p, order);
    int64_t rq_sp = checked_sub(checked_mul(order, c.q), checked_mul(slope, c.p));
    int64_t inner = exact_div(checked_abs(checked_mul(c.p, rq_sp)),
                              checked_mul(g, gcd64(c.p, c.q)),
                              "cable multiplicity quotient");
    return gcd64(order / g, inner);
}

bool is_positive_cable(int64_t order, int64_t slope, const CableParams& c) {
    require_order(order);
    // Reduced-form comparison; negating (p, q) jointly names the same curve,
    // so the slope is well defined.
    return Rational::reduced(c.q, c.p) > Rational::reduced(slope, order);
}

Rational cable_sl(const Rational& sl, int64_t order, int64_t slope,
                  const CableParams& c) {
    require_order(order);
    require_slope_distinct(order, slope, c);
    if (!is_positive_cable(order, slope, c))
        fail(errc::domain, "self-linking of a cable is only defined for positive cables");
    Rational r_sl = Rational(order) * sl;
    if (!r_sl.is_integer())
        fail(errc::invalid_argument, "r*sl must be an integer, got " + r_sl.str());
    int64_t g = gcd64(order, c.p);
    int64_t abs_p = checked_abs(c.p);
    int64_t rq_sp = checked_sub(checked_mul(order, c.q), checked_mul(slope, c.p));
    int64_t n = checked_add(checked_mul(abs_p, r_sl.num()),
                            checked_mul(checked_abs(rq_sp),
                                        checked_sub(abs_p, 1)));
    return Rational::reduced(n, g);
}

AssembledFiber assembly_oracle(int64_t chi_old, const SingularityCounts& counts_old,
                               int64_t order, int64_t slope, const CableParams& c) {
    if (!is_positive_cable(order, slope, c))
        fail(errc::domain, "fiber assembly is only described for positive cables");
    if (!poincare_hopf_check(chi_old, counts_old))
        fail(errc::invalid_argument,
             "singularity counts do not satisfy the Poincare-Hopf identity");
    AssemblyCount pieces = assembly_counts(order, slope, c);
    SingularityCounts counts{
        checked_add(checked_mul(pieces.surface_copies, counts_old.e_plus),
                    pieces.meridian_disks),
        checked_mul(pieces.surface_copies, counts_old.e_minus),
        checked_add(checked_mul(pieces.surface_copies, counts_old.h_plus),
                    pieces.bands),
        checked_mul(pieces.surface_copies, counts_old.h_minus)};
    int64_t chi = checked_sub(
        checked_add(checked_mul(pieces.surface_copies, chi_old),
                    pieces.meridian_disks),
        pieces.bands);
    return AssembledFiber{chi, counts};
}

Resolution integral_resolution(int64_t order, int64_t slope, int64_t coeff) {
    require_order(order);
    if (coeff == slope)
        fail(errc::invalid_argument,
             "resolution coefficient must differ from the Seifert slope");
    int64_t diff = checked_abs(checked_sub(slope, coeff));
    return Resolution{gcd64(order, coeff), 1, 1,
                      checked_mul(diff, checked_sub(1, order)), coeff > slope};
}

int64_t link_resolution_chi(int64_t chi, int64_t order,
                            std::span<const int64_t> slopes,
                            std::span<const int64_t> coeffs) {
    require_order(order);
    if (slopes.empty() || slopes.size() != coeffs.size())
        fail(errc::invalid_argument,
             "resolution needs matching nonempty slope and coefficient lists");
    int64_t total = 0;
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (coeffs[i] == slopes[i])
            fail(errc::invalid_argument,
                 "resolution coefficient equals the Seifert slope at component " +
                     std::to_string(i));
        total = checked_add(total, checked_abs(checked_sub(slopes[i], coeffs[i])));
    }
    return checked_add(chi, checked_mul(checked_sub(1, order), total));
}

Rational link_resolution_sl(const Rational& sl, int64_t order,
                            std::span<const int64_t> slopes,
                            std::span<const int64_t> coeffs) {
    require_order(order);
    if (slopes.empty() || slopes.size() != coeffs.size())
        fail(errc::invalid_argument,
             "resolution needs matching nonempty slope and coefficient lists");
    int64_t total = 0;
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (coeffs[i] <= slopes[i])
            fail(errc::domain,
                 "self-linking of a resolution is only defined when every "
                 "coefficient exceeds its Seifert slope");
        total = checked_add(total, checked_sub(coeffs[i], slopes[i]));
    }
    return Rational(order) * sl +
           Rational(checked_mul(checked_sub(order, 1), total));
}

}  // namespace ratknot
