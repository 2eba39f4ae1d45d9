#include "ratknot.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/cabling.hpp"
#include "core/foliation.hpp"
#include "core/invariants.hpp"
#include "core/lens.hpp"
#include "core/rational.hpp"
#include "core/unknot.hpp"

struct rk_foliation {
    ratknot::FoliationGraph graph;
};

namespace {

thread_local std::string t_last_error;

rk_status map_code(ratknot::errc code) {
    switch (code) {
        case ratknot::errc::invalid_argument: return RK_EINVAL;
        case ratknot::errc::domain: return RK_EDOMAIN;
        case ratknot::errc::overflow: return RK_EOVERFLOW;
        case ratknot::errc::parse: return RK_EPARSE;
        case ratknot::errc::unsupported: return RK_EUNSUPPORTED;
    }
    return RK_EINVAL;
}

rk_status set_error(rk_status status, const char* message) {
    t_last_error = message;
    return status;
}

template <typename Fn>
rk_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return RK_OK;
    } catch (const ratknot::Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::exception& e) {
        return set_error(RK_EINVAL, e.what());
    }
}

rk_status require(bool condition, const char* message) {
    return condition ? RK_OK : set_error(RK_EINVAL, message);
}

rk_rational wrap(const ratknot::Rational& value) {
    return rk_rational{value.num(), value.den()};
}

ratknot::Rational unwrap(rk_rational value) {
    return ratknot::Rational::reduced(value.num, value.den);
}

ratknot::SingularityCounts unwrap(rk_counts counts) {
    return ratknot::SingularityCounts::make(counts.e_plus, counts.e_minus,
                                            counts.h_plus, counts.h_minus);
}

rk_counts wrap(const ratknot::SingularityCounts& counts) {
    return rk_counts{counts.e_plus, counts.e_minus, counts.h_plus,
                     counts.h_minus};
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// Shared two-call pattern: out == NULL queries the size through *count.
template <typename T>
rk_status fill_array(const std::vector<T>& values, T* out, size_t cap,
                     size_t* count) {
    if (count == nullptr) return set_error(RK_EINVAL, "count must not be NULL");
    *count = values.size();
    if (out == nullptr) return RK_OK;
    if (cap < values.size())
        return set_error(RK_EBUFFER, "output buffer too small");
    std::copy(values.begin(), values.end(), out);
    return RK_OK;
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "1.0.0"; }

const char* rk_status_name(rk_status status) {
    switch (status) {
        case RK_OK: return "ok";
        case RK_EINVAL: return "invalid argument";
        case RK_EDOMAIN: return "domain error";
        case RK_EOVERFLOW: return "overflow";
        case RK_EPARSE: return "parse error";
        case RK_EUNSUPPORTED: return "unsupported";
        case RK_EBUFFER: return "buffer too small";
    }
    return "unknown status";
}

const char* rk_last_error(void) { return t_last_error.c_str(); }

rk_status rk_rational_make(int64_t num, int64_t den, rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] { *out = wrap(ratknot::Rational::reduced(num, den)); });
}

rk_status rk_rational_parse(const char* text, rk_rational* out) {
    if (rk_status s = require(text != nullptr && out != nullptr,
                              "text and out must not be NULL"))
        return s;
    return guarded([&] { *out = wrap(ratknot::Rational::parse(text)); });
}

rk_status rk_rational_format(rk_rational value, char* buf, size_t size) {
    if (rk_status s = require(buf != nullptr, "buf must not be NULL")) return s;
    return guarded([&] {
        std::string text = unwrap(value).str();
        if (text.size() + 1 > size)
            ratknot::fail(ratknot::errc::invalid_argument, "buffer too small");
        std::memcpy(buf, text.c_str(), text.size() + 1);
    });
}

rk_status rk_egcd(int64_t a, int64_t b, int64_t* g, int64_t* x, int64_t* y) {
    if (rk_status s = require(g != nullptr && x != nullptr && y != nullptr,
                              "g, x and y must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::BezoutTriple t = ratknot::egcd(a, b);
        *g = t.g;
        *x = t.x;
        *y = t.y;
    });
}

rk_status rk_lens_ncf(int64_t p, int64_t q, int64_t* coeffs, size_t cap,
                      size_t* count) {
    rk_status status = RK_OK;
    rk_status guard_status = guarded([&] {
        status = fill_array(ratknot::ncf_expand(p, q), coeffs, cap, count);
    });
    return guard_status != RK_OK ? guard_status : status;
}

rk_status rk_lens_ncf_eval(const int64_t* coeffs, size_t count,
                           rk_rational* out) {
    if (rk_status s = require(coeffs != nullptr && out != nullptr,
                              "coeffs and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = wrap(ratknot::ncf_evaluate(std::span(coeffs, count)));
    });
}

rk_status rk_lens_dual(int64_t p, int64_t q, int64_t* p_dual, int64_t* q_dual) {
    if (rk_status s = require(p_dual != nullptr && q_dual != nullptr,
                              "p_dual and q_dual must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::DualParams dual =
            ratknot::dual_params(ratknot::LensSpace::make(p, q));
        *p_dual = dual.p_dual;
        *q_dual = dual.q_dual;
    });
}

rk_status rk_lk_pushoff(int64_t order, int64_t slope, int64_t framing,
                        rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] { *out = wrap(ratknot::lk_pushoff(order, slope, framing)); });
}

rk_status rk_sl_from_counts(int64_t order, rk_counts counts, rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded(
        [&] { *out = wrap(ratknot::sl_from_counts(order, unwrap(counts))); });
}

rk_status rk_poincare_hopf_check(int64_t euler_char, rk_counts counts,
                                 int* holds) {
    if (rk_status s = require(holds != nullptr, "holds must not be NULL"))
        return s;
    return guarded([&] {
        *holds = ratknot::poincare_hopf_check(euler_char, unwrap(counts)) ? 1 : 0;
    });
}

rk_status rk_sl_defect(int64_t order, rk_rational sl, int64_t euler_char,
                       rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded(
        [&] { *out = wrap(ratknot::sl_defect(order, unwrap(sl), euler_char)); });
}

rk_status rk_bennequin_slack(rk_rational sl, int64_t euler_char, int64_t order,
                             rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] {
        *out = wrap(ratknot::bennequin_slack(unwrap(sl), euler_char, order));
    });
}

rk_status rk_bennequin_legendrian(rk_rational tb, rk_rational rot,
                                  int64_t euler_char, int64_t order,
                                  int* holds) {
    if (rk_status s = require(holds != nullptr, "holds must not be NULL"))
        return s;
    return guarded([&] {
        *holds = ratknot::bennequin_legendrian(unwrap(tb), unwrap(rot),
                                               euler_char, order)
                     ? 1
                     : 0;
    });
}

rk_status rk_transverse_pushoff(int64_t order, rk_rational tb, rk_rational rot,
                                rk_rational* sl) {
    if (rk_status s = require(sl != nullptr, "sl must not be NULL")) return s;
    return guarded([&] {
        ratknot::LegendrianRecord record = ratknot::LegendrianRecord::make(
            ratknot::SeifertData::make(order, 0, 0), unwrap(tb), unwrap(rot));
        *sl = wrap(ratknot::transverse_pushoff(record).sl);
    });
}

rk_status rk_legendrian_stabilize(int64_t order, rk_rational tb,
                                  rk_rational rot, int sign,
                                  rk_rational* tb_out, rk_rational* rot_out) {
    if (rk_status s = require(tb_out != nullptr && rot_out != nullptr,
                              "tb_out and rot_out must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::LegendrianRecord record = ratknot::LegendrianRecord::make(
            ratknot::SeifertData::make(order, 0, 0), unwrap(tb), unwrap(rot));
        ratknot::LegendrianRecord stabilized =
            ratknot::legendrian_stabilize(record, sign);
        *tb_out = wrap(stabilized.tb);
        *rot_out = wrap(stabilized.rot);
    });
}

rk_status rk_transverse_stabilize(int64_t order, rk_rational sl,
                                  rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] {
        ratknot::TransverseRecord record = ratknot::TransverseRecord::make(
            ratknot::SeifertData::make(order, 0, 0), unwrap(sl));
        *out = wrap(ratknot::transverse_stabilize(record).sl);
    });
}

rk_status rk_cable_chi(int64_t chi_old, int64_t order, int64_t slope,
                       int64_t p, int64_t q, int64_t* chi_new) {
    if (rk_status s = require(chi_new != nullptr, "chi_new must not be NULL"))
        return s;
    return guarded([&] {
        *chi_new = ratknot::cable_chi(chi_old, order, slope,
                                      ratknot::CableParams::make(p, q));
    });
}

rk_status rk_cable_order(int64_t order, int64_t p, int64_t* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] { *out = ratknot::cable_order(order, p); });
}

rk_status rk_cable_multiplicity(int64_t order, int64_t slope, int64_t p,
                                int64_t q, int64_t* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] {
        *out = ratknot::cable_multiplicity(order, slope,
                                           ratknot::CableParams::make(p, q));
    });
}

rk_status rk_cable_is_positive(int64_t order, int64_t slope, int64_t p,
                               int64_t q, int* positive) {
    if (rk_status s = require(positive != nullptr, "positive must not be NULL"))
        return s;
    return guarded([&] {
        *positive = ratknot::is_positive_cable(order, slope,
                                               ratknot::CableParams::make(p, q))
                        ? 1
                        : 0;
    });
}

rk_status rk_cable_sl(rk_rational sl, int64_t order, int64_t slope, int64_t p,
                      int64_t q, rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] {
        *out = wrap(ratknot::cable_sl(unwrap(sl), order, slope,
                                      ratknot::CableParams::make(p, q)));
    });
}

rk_status rk_cable_assemble(int64_t chi_old, rk_counts counts_old,
                            int64_t order, int64_t slope, int64_t p, int64_t q,
                            int64_t* chi_new, rk_counts* counts_new) {
    if (rk_status s = require(chi_new != nullptr && counts_new != nullptr,
                              "chi_new and counts_new must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::AssembledFiber fiber =
            ratknot::assembly_oracle(chi_old, unwrap(counts_old), order, slope,
                                     ratknot::CableParams::make(p, q));
        *chi_new = fiber.chi;
        *counts_new = wrap(fiber.counts);
    });
}

rk_status rk_integral_resolution(int64_t order, int64_t slope, int64_t coeff,
                                 int64_t* components, int64_t* chi_delta,
                                 int* positive) {
    if (rk_status s = require(
            components != nullptr && chi_delta != nullptr && positive != nullptr,
            "components, chi_delta and positive must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::Resolution res = ratknot::integral_resolution(order, slope, coeff);
        *components = res.components;
        *chi_delta = res.chi_delta;
        *positive = res.positive ? 1 : 0;
    });
}

rk_status rk_link_resolution_chi(int64_t chi, int64_t order,
                                 const int64_t* slopes, const int64_t* coeffs,
                                 size_t n, int64_t* out) {
    if (rk_status s = require(slopes != nullptr && coeffs != nullptr &&
                                  out != nullptr,
                              "slopes, coeffs and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = ratknot::link_resolution_chi(chi, order, std::span(slopes, n),
                                            std::span(coeffs, n));
    });
}

rk_status rk_link_resolution_sl(rk_rational sl, int64_t order,
                                const int64_t* slopes, const int64_t* coeffs,
                                size_t n, rk_rational* out) {
    if (rk_status s = require(slopes != nullptr && coeffs != nullptr &&
                                  out != nullptr,
                              "slopes, coeffs and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = wrap(ratknot::link_resolution_sl(unwrap(sl), order,
                                                std::span(slopes, n),
                                                std::span(coeffs, n)));
    });
}

rk_status rk_foliation_parse(const char* text, rk_foliation** out) {
    if (rk_status s = require(text != nullptr && out != nullptr,
                              "text and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = new rk_foliation{ratknot::FoliationGraph::parse(text)};
    });
}

void rk_foliation_free(rk_foliation* graph) { delete graph; }

rk_status rk_foliation_format(const rk_foliation* graph, char** out) {
    if (rk_status s = require(graph != nullptr && out != nullptr,
                              "graph and out must not be NULL"))
        return s;
    return guarded([&] {
        char* text = dup_string(graph->graph.serialize());
        if (text == nullptr)
            ratknot::fail(ratknot::errc::invalid_argument, "out of memory");
        *out = text;
    });
}

void rk_string_free(char* text) { std::free(text); }

rk_status rk_foliation_counts(const rk_foliation* graph, rk_counts* out) {
    if (rk_status s = require(graph != nullptr && out != nullptr,
                              "graph and out must not be NULL"))
        return s;
    return guarded([&] { *out = wrap(graph->graph.counts()); });
}

rk_status rk_foliation_cancel_pair(const rk_foliation* graph,
                                   const char* elliptic_id,
                                   const char* hyperbolic_id,
                                   rk_foliation** out) {
    if (rk_status s = require(graph != nullptr && elliptic_id != nullptr &&
                                  hyperbolic_id != nullptr && out != nullptr,
                              "graph, ids and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = new rk_foliation{
            graph->graph.cancel_pair(elliptic_id, hyperbolic_id)};
    });
}

rk_status rk_foliation_add_pair(const rk_foliation* graph, int sign,
                                const char* edge_from, const char* edge_to,
                                rk_foliation** out) {
    if (rk_status s = require(graph != nullptr && edge_from != nullptr &&
                                  edge_to != nullptr && out != nullptr,
                              "graph, edge ids and out must not be NULL"))
        return s;
    if (rk_status s = require(sign != 0, "sign must be positive or negative"))
        return s;
    return guarded([&] {
        *out = new rk_foliation{graph->graph.add_canceling_pair(
            sign > 0 ? ratknot::Sign::positive : ratknot::Sign::negative,
            edge_from, edge_to)};
    });
}

rk_status rk_foliation_normalize(const rk_foliation* graph,
                                 rk_foliation** normalized,
                                 char** certificate) {
    if (rk_status s = require(graph != nullptr && normalized != nullptr &&
                                  certificate != nullptr,
                              "graph and both outputs must not be NULL"))
        return s;
    return guarded([&] {
        ratknot::NormalizeResult result =
            graph->graph.normalize();
        if (result.overtwisted) {
            std::string joined;
            for (size_t i = 0; i < result.certificate.size(); ++i) {
                if (i > 0) joined += " ";
                joined += result.certificate[i];
            }
            char* text = dup_string(joined);
            if (text == nullptr)
                ratknot::fail(ratknot::errc::invalid_argument, "out of memory");
            *normalized = nullptr;
            *certificate = text;
        } else {
            *normalized = new rk_foliation{std::move(*result.normalized)};
            *certificate = nullptr;
        }
    });
}

rk_status rk_unknot_classify(int64_t p, int64_t q, uint32_t* type_mask) {
    if (rk_status s = require(type_mask != nullptr, "type_mask must not be NULL"))
        return s;
    return guarded([&] {
        uint32_t mask = 0;
        for (ratknot::UnknotType type :
             ratknot::classify_unknots(ratknot::LensSpace::make(p, q))) {
            if (type.core == ratknot::Core::k0)
                mask |= type.reversed ? RK_UNKNOT_K0_REV : RK_UNKNOT_K0;
            else
                mask |= type.reversed ? RK_UNKNOT_K1_REV : RK_UNKNOT_K1;
        }
        *type_mask = mask;
    });
}

rk_status rk_unknot_max_tb(int64_t p, int64_t q, rk_rational* out) {
    if (rk_status s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded(
        [&] { *out = wrap(ratknot::max_tb(ratknot::LensSpace::make(p, q))); });
}

rk_status rk_unknot_euler_classes(int64_t p, int64_t* out, size_t cap,
                                  size_t* count) {
    rk_status status = RK_OK;
    rk_status guard_status = guarded([&] {
        status = fill_array(ratknot::euler_classes(p), out, cap, count);
    });
    return guard_status != RK_OK ? guard_status : status;
}

rk_status rk_unknot_mountain(int64_t p, int64_t l, int orientation,
                             int64_t depth, rk_mountain_point* out, size_t cap,
                             size_t* count) {
    if (rk_status s = require(orientation != 0,
                              "orientation must be positive (K1) or negative (-K1)"))
        return s;
    rk_status status = RK_OK;
    rk_status guard_status = guarded([&] {
        std::vector<ratknot::MountainPoint> points = ratknot::mountain_range(
            p, l, orientation > 0 ? ratknot::Orient::k1 : ratknot::Orient::neg_k1,
            depth);
        std::vector<rk_mountain_point> converted;
        converted.reserve(points.size());
        for (const ratknot::MountainPoint& point : points)
            converted.push_back(rk_mountain_point{wrap(point.tb), wrap(point.rot),
                                                  point.k, point.m});
        status = fill_array(converted, out, cap, count);
    });
    return guard_status != RK_OK ? guard_status : status;
}

rk_status rk_unknot_sl_spectrum(int64_t p, int64_t l, int orientation,
                                int64_t depth, rk_rational* out, size_t cap,
                                size_t* count) {
    if (rk_status s = require(orientation != 0,
                              "orientation must be positive (K1) or negative (-K1)"))
        return s;
    rk_status status = RK_OK;
    rk_status guard_status = guarded([&] {
        std::vector<ratknot::Rational> values = ratknot::sl_spectrum(
            p, l, orientation > 0 ? ratknot::Orient::k1 : ratknot::Orient::neg_k1,
            depth);
        std::vector<rk_rational> converted;
        converted.reserve(values.size());
        for (const ratknot::Rational& value : values)
            converted.push_back(wrap(value));
        status = fill_array(converted, out, cap, count);
    });
    return guard_status != RK_OK ? guard_status : status;
}

}  // extern "C"
