/* ratknot -- exact rational invariants of Legendrian and transverse knots
 * in rationally null-homologous knot types, cabling arithmetic for rational
 * open books, and the rational unknot classification data for lens spaces.
 *
 * C interface to the shared library. Every function returns an rk_status;
 * results come back through out parameters. On failure the out parameters
 * are untouched and rk_last_error() carries a one-line reason for the
 * calling thread. All arithmetic is exact; a computation that would leave
 * 64-bit range reports RK_EOVERFLOW instead of wrapping.
 */

#ifndef RATKNOT_H
#define RATKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_EINVAL = 1,       /* invalid argument or failed precondition */
    RK_EDOMAIN = 2,      /* operation mathematically undefined here */
    RK_EOVERFLOW = 3,    /* exact arithmetic would leave 64-bit range */
    RK_EPARSE = 4,       /* malformed textual input */
    RK_EUNSUPPORTED = 5, /* outside the implemented classification range */
    RK_EBUFFER = 6,      /* caller-provided buffer too small */
} rk_status;

const char* rk_version(void);
const char* rk_status_name(rk_status status);
/* Detail message for the most recent failure on this thread. */
const char* rk_last_error(void);

/* ------------------------------------------------------------------ */
/* Exact rationals. Always reduced, denominator > 0.                   */

typedef struct rk_rational {
    int64_t num;
    int64_t den;
} rk_rational;

rk_status rk_rational_make(int64_t num, int64_t den, rk_rational* out);
/* Accepts "n" and "n/d" (optionally negative n), whitespace-free. */
rk_status rk_rational_parse(const char* text, rk_rational* out);
/* Writes "n/d" (integers as "n/1"). RK_EBUFFER when size is too small. */
rk_status rk_rational_format(rk_rational value, char* buf, size_t size);

/* g = gcd(a,b) >= 0 with a*x + b*y = g. */
rk_status rk_egcd(int64_t a, int64_t b, int64_t* g, int64_t* x, int64_t* y);

/* ------------------------------------------------------------------ */
/* Lens spaces L(p,q), p > q > 0, gcd(p,q) = 1.                        */

/* Coefficients a_i <= -2 with a_0 - 1/(a_1 - ...) = -p/q. Two-call
 * pattern: pass coeffs = NULL to query the length through *count. */
rk_status rk_lens_ncf(int64_t p, int64_t q, int64_t* coeffs, size_t cap,
                      size_t* count);
rk_status rk_lens_ncf_eval(const int64_t* coeffs, size_t count,
                           rk_rational* out);
/* Dual parameters: p*q' - p'*q = 1, p > p' > 0, q >= q' > 0. */
rk_status rk_lens_dual(int64_t p, int64_t q, int64_t* p_dual, int64_t* q_dual);

/* ------------------------------------------------------------------ */
/* Classical invariants.                                               */

typedef struct rk_counts {
    int64_t e_plus;
    int64_t e_minus;
    int64_t h_plus;
    int64_t h_minus;
} rk_counts;

/* (order*framing - slope)/order. */
rk_status rk_lk_pushoff(int64_t order, int64_t slope, int64_t framing,
                        rk_rational* out);
/* ((e_- - h_-) - (e_+ - h_+)) / order. */
rk_status rk_sl_from_counts(int64_t order, rk_counts counts, rk_rational* out);
/* *holds = (chi == (e_+ - h_+) + (e_- - h_-)). */
rk_status rk_poincare_hopf_check(int64_t euler_char, rk_counts counts,
                                 int* holds);
/* order*sl + chi; requires order*sl integral. */
rk_status rk_sl_defect(int64_t order, rk_rational sl, int64_t euler_char,
                       rk_rational* out);
/* -chi/order - sl; nonnegative iff the transverse Bennequin bound holds. */
rk_status rk_bennequin_slack(rk_rational sl, int64_t euler_char, int64_t order,
                             rk_rational* out);
/* *holds = (tb + |rot| <= -chi/order). */
rk_status rk_bennequin_legendrian(rk_rational tb, rk_rational rot,
                                  int64_t euler_char, int64_t order,
                                  int* holds);
/* sl of the positive transverse push-off: tb - rot. order validates that
 * order*tb and order*rot are integers. */
rk_status rk_transverse_pushoff(int64_t order, rk_rational tb, rk_rational rot,
                                rk_rational* sl);
/* sign > 0: (tb-1, rot+1); sign < 0: (tb-1, rot-1). */
rk_status rk_legendrian_stabilize(int64_t order, rk_rational tb,
                                  rk_rational rot, int sign,
                                  rk_rational* tb_out, rk_rational* rot_out);
/* sl - 2. */
rk_status rk_transverse_stabilize(int64_t order, rk_rational sl,
                                  rk_rational* out);

/* ------------------------------------------------------------------ */
/* Cabling and integral resolutions. The surface has order `order` and
 * boundary slope `slope` in a fixed framing; (p,q) are the cabling
 * coefficients, p not in {0, 1, -1} and q/p != slope/order.           */

rk_status rk_cable_chi(int64_t chi_old, int64_t order, int64_t slope,
                       int64_t p, int64_t q, int64_t* chi_new);
rk_status rk_cable_order(int64_t order, int64_t p, int64_t* out);
rk_status rk_cable_multiplicity(int64_t order, int64_t slope, int64_t p,
                                int64_t q, int64_t* out);
rk_status rk_cable_is_positive(int64_t order, int64_t slope, int64_t p,
                               int64_t q, int* positive);
/* Requires a positive cable and order*sl integral. */
rk_status rk_cable_sl(rk_rational sl, int64_t order, int64_t slope, int64_t p,
                      int64_t q, rk_rational* out);
/* Piece-by-piece fiber assembly; the independent cross-check for
 * rk_cable_chi and rk_cable_sl. Requires a positive cable and counts
 * satisfying the Poincare-Hopf identity for chi_old. */
rk_status rk_cable_assemble(int64_t chi_old, rk_counts counts_old,
                            int64_t order, int64_t slope, int64_t p, int64_t q,
                            int64_t* chi_new, rk_counts* counts_new);
/* (order, coeff)-cable of one binding component; coeff != slope. */
rk_status rk_integral_resolution(int64_t order, int64_t slope, int64_t coeff,
                                 int64_t* components, int64_t* chi_delta,
                                 int* positive);
rk_status rk_link_resolution_chi(int64_t chi, int64_t order,
                                 const int64_t* slopes, const int64_t* coeffs,
                                 size_t n, int64_t* out);
/* Requires coeffs[i] > slopes[i] for every i. */
rk_status rk_link_resolution_sl(rk_rational sl, int64_t order,
                                const int64_t* slopes, const int64_t* coeffs,
                                size_t n, rk_rational* out);

/* ------------------------------------------------------------------ */
/* Combinatorial characteristic foliations (opaque handles).
 *
 * Text format, one item per line:
 *     N <id> <e|h> <+|->     a signed elliptic/hyperbolic singularity
 *     E <from> <to>          a separatrix in flow direction
 * The virtual boundary node has the fixed id "∂" (U+2202), is never
 * declared, and only receives flow.                                   */

typedef struct rk_foliation rk_foliation;

rk_status rk_foliation_parse(const char* text, rk_foliation** out);
void rk_foliation_free(rk_foliation* graph);
/* Serializes in the text format above; free with rk_string_free. */
rk_status rk_foliation_format(const rk_foliation* graph, char** out);
void rk_string_free(char* text);
rk_status rk_foliation_counts(const rk_foliation* graph, rk_counts* out);
rk_status rk_foliation_cancel_pair(const rk_foliation* graph,
                                   const char* elliptic_id,
                                   const char* hyperbolic_id,
                                   rk_foliation** out);
/* sign > 0 inserts a positive pair, sign < 0 a negative one, along the
 * edge from -> to. */
rk_status rk_foliation_add_pair(const rk_foliation* graph, int sign,
                                const char* edge_from, const char* edge_to,
                                rk_foliation** out);
/* On success exactly one of the outputs is set: *normalized (negative
 * elliptic points all cancelled) or *certificate (space-separated ids of
 * the basin frontier witnessing an overtwisted disk; free with
 * rk_string_free). The other is NULL.                                  */
rk_status rk_foliation_normalize(const rk_foliation* graph,
                                 rk_foliation** normalized,
                                 char** certificate);

/* ------------------------------------------------------------------ */
/* Rational unknots in lens spaces.                                    */

#define RK_UNKNOT_K0 1u
#define RK_UNKNOT_K0_REV 2u
#define RK_UNKNOT_K1 4u
#define RK_UNKNOT_K1_REV 8u

/* *type_mask is a bitwise or of the RK_UNKNOT_* flags. */
rk_status rk_unknot_classify(int64_t p, int64_t q, uint32_t* type_mask);
/* Maximal tb for K1 and -K1: -p'/p. */
rk_status rk_unknot_max_tb(int64_t p, int64_t q, rk_rational* out);
/* {p-2-2k : k = 0..p-2} for odd p >= 3; two-call pattern as rk_lens_ncf. */
rk_status rk_unknot_euler_classes(int64_t p, int64_t* out, size_t cap,
                                  size_t* count);

typedef struct rk_mountain_point {
    rk_rational tb;
    rk_rational rot;
    int64_t k; /* stabilization depth below the peak */
    int64_t m; /* 0..k, rot = rot_peak + k - 2m */
} rk_mountain_point;

/* orientation > 0 selects K1, orientation < 0 selects -K1. Two-call
 * pattern: out = NULL queries the point count. */
rk_status rk_unknot_mountain(int64_t p, int64_t l, int orientation,
                             int64_t depth, rk_mountain_point* out, size_t cap,
                             size_t* count);
rk_status rk_unknot_sl_spectrum(int64_t p, int64_t l, int orientation,
                                int64_t depth, rk_rational* out, size_t cap,
                                size_t* count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RATKNOT_H */
