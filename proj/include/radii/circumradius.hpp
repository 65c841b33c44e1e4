#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "radii/ball.hpp"
#include "radii/body.hpp"
#include "radii/caratheodory.hpp"
#include "radii/gauge.hpp"
#include "radii/lp.hpp"
#include "radii/minimax.hpp"
#include "radii/tolerances.hpp"

namespace radii {

/// Optimal-containment witness: touching points on the boundary of the scaled
/// gauge, exterior outer normals there, and positive weights with
/// sum_i weights[i] * normals[i] = 0.
struct Certificate {
    std::vector<Vec> touch_points;
    std::vector<Vec> normals;
    Vec weights;
    bool approximate = false;  // built from near-active points (iterative path)
};

enum class SolvePath { welzl, polytope_lp, iterative };

struct CircumResult {
    double radius = 0.0;
    Vec center;
    std::optional<Certificate> certificate;
    SolvePath path = SolvePath::welzl;
};

namespace detail {

struct PolytopeLpOutcome {
    double radius;
    Vec center;
    LPSolution lp;                  // duals pair with facets by row index
    std::vector<std::size_t> touch_vertex;  // per facet: argmax vertex index
};

/// min rho s.t. a_i.(v - z) <= rho * b_i over all facets i, points v of K.
/// Only the support value per facet matters, so the LP has one row per facet.
/// Facet rows are normalized (b_i = 1). The optimal center can be a face;
/// the reported one is the lexicographic minimum over the optimal set, which
/// is unique and commutes with translating or scaling the body. Duals of the
/// first solve stay valid for it by complementary slackness.
inline PolytopeLpOutcome circumradius_rows(const PointBody& body, const std::vector<Vec>& facets) {
    const int n = body.dim;
    LpProblem p;  // vars: z (n, free), rho (free); min rho
    p.c.assign(n + 1, 0.0);
    p.c[n] = 1.0;
    PolytopeLpOutcome out;
    for (const Vec& a : facets) {
        std::size_t arg = 0;
        const double h = support_value(body, a, &arg);
        out.touch_vertex.push_back(arg);
        LpRow row;  // -a.z - rho <= -h
        row.a = neg(a);
        row.a.push_back(-1.0);
        row.rel = Relation::le;
        row.b = -h;
        p.rows.push_back(std::move(row));
    }
    LPSolution s = solve_lp(p);
    if (s.status == LpStatus::unbounded)
        throw InputError("circumradius: gauge normals do not positively span (unbounded gauge)");
    if (s.status != LpStatus::optimal) throw SolverFailure("circumradius: containment LP failed");
    out.center = Vec(s.x.begin(), s.x.begin() + n);
    out.radius = std::max(0.0, s.x[n]);
    out.lp = s;

    LpProblem refine = p;
    LpRow pin_rho;  // restrict to the optimal face
    pin_rho.a.assign(n + 1, 0.0);
    pin_rho.a[n] = 1.0;
    pin_rho.rel = Relation::le;
    pin_rho.b = s.x[n] + 1e-12 * (1.0 + std::fabs(s.x[n]));
    refine.rows.push_back(std::move(pin_rho));
    Vec lex(n, 0.0);
    for (int d = 0; d < n; ++d) {
        refine.c.assign(n + 1, 0.0);
        refine.c[d] = 1.0;
        LPSolution rs = solve_lp(refine);
        if (rs.status != LpStatus::optimal) return out;  // cylinder-like gauge: keep first solve
        lex[d] = rs.x[d];
        LpRow pin;
        pin.a.assign(n + 1, 0.0);
        pin.a[d] = 1.0;
        pin.rel = Relation::eq;
        pin.b = lex[d];
        refine.rows.push_back(std::move(pin));
    }
    out.center = lex;
    return out;
}

inline Certificate certificate_from_lp(const PointBody& body, const std::vector<Vec>& facets,
                                       const PolytopeLpOutcome& o) {
    std::vector<Vec> normals, touches;
    Vec raw_weights;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (o.lp.duals[i] > eps_pos) {
            normals.push_back(facets[i]);
            touches.push_back(body.points[o.touch_vertex[i]]);
            raw_weights.push_back(o.lp.duals[i]);
        }
    }
    if (normals.size() < 2) throw SolverFailure("certificate: fewer than two active facets");
    // The witness needs at most n+1 touching pairs; re-balance on the
    // surviving normals.
    ConvexCombination cc = caratheodory_reduce(normals, zeros(body.dim));
    Certificate cert;
    for (std::size_t j = 0; j < cc.indices.size(); ++j) {
        cert.normals.push_back(normals[cc.indices[j]]);
        cert.touch_points.push_back(touches[cc.indices[j]]);
        cert.weights.push_back(cc.weights[j]);
    }
    return cert;
}

}  // namespace detail

/// Circumradius of K with respect to the gauge C: the smallest lambda >= 0
/// such that a translate of K fits inside lambda*C, plus the witnessing
/// center. Euclidean gauges (and p = 2) run through the enclosing-ball
/// solver, polyhedral gauges through one LP, other l_p through the iterative
/// minimax path.
inline CircumResult circumradius(const PointBody& body, const Gauge& gauge) {
    CircumResult res;
    if (std::holds_alternative<EuclideanBall>(gauge) ||
        (std::holds_alternative<LpBall>(gauge) && std::get<LpBall>(gauge).p == 2.0)) {
        Ball b = min_enclosing_ball(body);
        res.radius = b.radius;
        res.center = b.center;
        res.path = SolvePath::welzl;
        return res;
    }
    if (auto poly = polyhedral_form(gauge, body.dim)) {
        auto o = detail::circumradius_rows(body, poly->normals);
        res.radius = o.radius;
        res.center = o.center;
        res.path = SolvePath::polytope_lp;
        return res;
    }
    const double p = std::get<LpBall>(gauge).p;
    MinimaxResult r = minimize_pnorm_max(body.points, p);
    res.radius = r.value;
    res.center = r.center;
    res.path = SolvePath::iterative;
    return res;
}

/// Iterative-path circumradius for any p in (1, inf); used to cross-check the
/// exact p = 2 route.
inline CircumResult circumradius_iterative(const PointBody& body, double p) {
    if (!(p > 1.0) || std::isinf(p)) throw InputError("circumradius_iterative: need finite p > 1");
    MinimaxResult r = minimize_pnorm_max(body.points, p);
    return {r.value, r.center, std::nullopt, SolvePath::iterative};
}

/// Extract an optimal-containment certificate for a computed circumradius.
/// Exact for Euclidean and polyhedral gauges; for other l_p the certificate
/// is assembled from near-active points and flagged approximate.
inline Certificate extract_certificate(const PointBody& body, const Gauge& gauge,
                                       const CircumResult& result) {
    if (result.radius <= eps_pos)
        throw NoCertificate("extract_certificate: radius 0 has no containment certificate");
    const int n = body.dim;
    if (result.path == SolvePath::welzl) {
        std::vector<Vec> on_sphere;
        std::vector<std::size_t> sphere_idx;
        for (std::size_t i = 0; i < body.points.size(); ++i)
            if (std::fabs(dist2(body.points[i], result.center) - result.radius) <= eps_cert) {
                on_sphere.push_back(body.points[i]);
                sphere_idx.push_back(i);
            }
        if (on_sphere.size() < 2)
            throw SolverFailure("extract_certificate: fewer than two touching points");
        ConvexCombination cc = caratheodory_reduce(on_sphere, result.center);
        Certificate cert;
        for (std::size_t j = 0; j < cc.indices.size(); ++j) {
            const Vec& tp = on_sphere[cc.indices[j]];
            cert.touch_points.push_back(tp);
            cert.normals.push_back(scaled(sub(tp, result.center), 1.0 / result.radius));
            cert.weights.push_back(cc.weights[j]);
        }
        return cert;
    }
    if (auto poly = polyhedral_form(gauge, n)) {
        auto o = detail::circumradius_rows(body, poly->normals);
        if (std::fabs(o.radius - result.radius) > eps_cert * (1.0 + result.radius))
            throw InputError("extract_certificate: result is not optimal for this body/gauge");
        return detail::certificate_from_lp(body, poly->normals, o);
    }
    // Iterative path: near-active points, gradient normals, LP re-balance.
    const double p = std::get<LpBall>(gauge).p;
    Certificate cert;
    cert.approximate = true;
    double tol = eps_cert;
    for (; tol <= 1e-3; tol *= 10) {
        std::vector<Vec> normals, touches;
        for (const Vec& v : body.points) {
            Vec x = sub(v, result.center);
            if (lp_norm(x, p) < result.radius * (1.0 - tol)) continue;
            Vec u(x.size(), 0.0);
            const double nx = lp_norm(x, p);
            for (std::size_t d = 0; d < x.size(); ++d) {
                const double r = std::fabs(x[d]) / nx;
                u[d] = (x[d] > 0 ? 1.0 : x[d] < 0 ? -1.0 : 0.0) * std::pow(r, p - 1.0);
            }
            touches.push_back(v);
            normals.push_back(std::move(u));
        }
        if (normals.size() < 2) continue;
        HullWitness w = in_convex_hull(normals, zeros(n), 1e-5);
        if (!w.inside) continue;
        ConvexCombination cc = caratheodory_reduce(normals, zeros(n));
        for (std::size_t j = 0; j < cc.indices.size(); ++j) {
            cert.normals.push_back(normals[cc.indices[j]]);
            cert.touch_points.push_back(touches[cc.indices[j]]);
            cert.weights.push_back(cc.weights[j]);
        }
        return cert;
    }
    throw SolverFailure("extract_certificate: no balanced near-active set found");
}

struct CertificateCheck {
    bool count_ok = false;
    bool touches_on_boundary = false;
    bool touches_in_body = false;
    bool normals_support_body = false;
    bool weights_positive = false;
    bool balance_ok = false;
    double balance_norm = 0.0;
    bool ok() const {
        return count_ok && touches_on_boundary && touches_in_body && normals_support_body &&
               weights_positive && balance_ok;
    }
};

/// Re-check every certificate invariant by direct arithmetic, independent of
/// how the certificate was produced.
inline CertificateCheck verify_certificate(const PointBody& body, const Gauge& gauge,
                                           const CircumResult& result, const Certificate& cert,
                                           double tol = eps_cert) {
    CertificateCheck c;
    const std::size_t k = cert.normals.size();
    c.count_ok = k >= 2 && k <= static_cast<std::size_t>(body.dim) + 1 &&
                 cert.touch_points.size() == k && cert.weights.size() == k;
    if (!c.count_ok) return c;

    c.touches_on_boundary = true;
    for (const Vec& tp : cert.touch_points) {
        const double g = gauge_value(gauge, sub(tp, result.center));
        if (std::fabs(g - result.radius) > tol * (1.0 + result.radius)) c.touches_on_boundary = false;
    }
    c.touches_in_body = true;
    for (const Vec& tp : cert.touch_points) {
        bool found = false;
        for (const Vec& v : body.points)
            if (approx_equal(v, tp, tol)) found = true;
        if (!found) c.touches_in_body = false;
    }
    c.normals_support_body = true;
    for (std::size_t j = 0; j < k; ++j) {
        const double scale = std::max(1.0, norm2(cert.normals[j]));
        for (const Vec& v : body.points)
            if (dot(cert.normals[j], sub(v, cert.touch_points[j])) > tol * scale)
                c.normals_support_body = false;
    }
    c.weights_positive = true;
    for (double w : cert.weights)
        if (!(w > eps_pos)) c.weights_positive = false;
    Vec s = zeros(body.dim);
    for (std::size_t j = 0; j < k; ++j) axpy(s, cert.weights[j], cert.normals[j]);
    c.balance_norm = norm2(s);
    c.balance_ok = c.balance_norm <= tol;
    return c;
}

/// Spherical hull condition: with all points of K on the unit sphere,
/// true iff 0 lies in conv(K) -- equivalently no direction a has all of K in
/// the open halfsphere {x.a < 0}. `samples` seeds a randomized falsification
/// pre-pass; the decision itself is by LP.
inline bool check_condition_4(const PointBody& body, int samples = 64) {
    for (const Vec& v : body.points)
        if (std::fabs(norm2(v) - 1.0) > eps_cert)
            throw InputError("check_condition_4: points must lie on the unit sphere");
    Rng rng(0xc0427ull);
    for (int s = 0; s < samples; ++s) {
        const Vec a = rng.unit_vec(body.dim);
        bool all_negative = true;
        for (const Vec& v : body.points)
            if (dot(v, a) >= -eps_feas) {
                all_negative = false;
                break;
            }
        if (all_negative) return false;  // exact witness: strict separation
    }
    return in_convex_hull(body.points, zeros(body.dim)).inside;
}

}  // namespace radii
