#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "radii/balanced.hpp"
#include "radii/body.hpp"
#include "radii/circumradius.hpp"
#include "radii/equality.hpp"
#include "radii/gauge.hpp"
#include "radii/io.hpp"
#include "radii/report.hpp"
#include "radii/rng.hpp"

namespace radii {

// ---- random instance generators -----------------------------------------

struct BodyGenOptions {
    int min_points = 3;
    int max_points = 8;
    double subspace_prob = 0.4;  // drop to a coordinate subspace; lets
                                 // mutually orthogonal tuples occur by chance
};

inline PointBody random_body(Rng& rng, int dim, const BodyGenOptions& opt = {}) {
    const int k = rng.uniform_int(opt.min_points, opt.max_points);
    std::vector<bool> keep(dim, true);
    if (dim >= 2 && rng.uniform01() < opt.subspace_prob) {
        const int d = rng.uniform_int(1, dim - 1);
        for (int i = 0; i < dim; ++i) keep[i] = false;
        for (int i = 0; i < d; ++i) {
            int pick = rng.uniform_int(0, dim - 1);
            while (keep[pick]) pick = (pick + 1) % dim;
            keep[pick] = true;
        }
    }
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i) {
        Vec p(dim);
        for (int d = 0; d < dim; ++d) p[d] = keep[d] ? rng.uniform(-1.0, 1.0) : 0.0;
        pts.push_back(std::move(p));
    }
    return PointBody(dim, std::move(pts));
}

/// Random gauge: a box with random positive offsets cut by a few random
/// halfspaces; bounded with interior origin by construction.
inline HPolytope random_gauge(Rng& rng, int dim) {
    std::vector<Vec> a;
    Vec b;
    for (int d = 0; d < dim; ++d) {
        a.push_back(unit_axis(dim, d, 1.0));
        b.push_back(rng.uniform(0.5, 2.0));
        a.push_back(unit_axis(dim, d, -1.0));
        b.push_back(rng.uniform(0.5, 2.0));
    }
    const int extra = rng.uniform_int(0, dim + 1);
    for (int i = 0; i < extra; ++i) {
        a.push_back(rng.unit_vec(dim));
        b.push_back(rng.uniform(0.5, 2.0));
    }
    return HPolytope(dim, a, b);
}

// ---- theorem suites -------------------------------------------------------

namespace detail {

inline jsonv bodies_artifact(const std::vector<PointBody>& bodies) {
    jsonv arr = jsonv::array();
    for (const PointBody& b : bodies) arr.push_back(body_to_json(b));
    return arr;
}

inline void require_common_dim(const std::vector<PointBody>& bodies, const char* what) {
    if (bodies.empty()) throw InputError(std::string(what) + ": empty body list");
    for (const PointBody& b : bodies)
        if (b.dim != bodies[0].dim) throw InputError(std::string(what) + ": dimension mismatch");
}

}  // namespace detail

/// sum_i R(K_i) <= sqrt(j) * R(sum K_i), Euclidean.
inline InstanceReport check_sqrt_j(const std::vector<PointBody>& bodies, std::int64_t id = 0,
                                   std::uint64_t seed = 0,
                                   std::size_t max_sum_points = default_max_sum_points) {
    detail::require_common_dim(bodies, "check_sqrt_j");
    InstanceReport r;
    r.instance_id = id;
    r.seed = seed;
    r.theorem_tag = "sqrt-j";
    Vec radii_list;
    double lhs = 0;
    for (const PointBody& b : bodies) {
        const double ri = min_enclosing_ball(b).radius;
        radii_list.push_back(ri);
        lhs += ri;
    }
    const double rsum = min_enclosing_ball(minkowski_sum(bodies, max_sum_points)).radius;
    r.lhs = lhs;
    r.rhs = std::sqrt(static_cast<double>(bodies.size())) * rsum;
    r.artifacts["bodies"] = detail::bodies_artifact(bodies);
    r.artifacts["radii"] = radii_list;
    r.artifacts["sum_radius"] = rsum;
    r.finish();
    return r;
}

/// sum_i R(K_i)^2 <= R(sum K_i)^2, Euclidean.
inline InstanceReport check_sum_of_squares(const std::vector<PointBody>& bodies, std::int64_t id = 0,
                                           std::uint64_t seed = 0,
                                           std::size_t max_sum_points = default_max_sum_points) {
    detail::require_common_dim(bodies, "check_sum_of_squares");
    InstanceReport r;
    r.instance_id = id;
    r.seed = seed;
    r.theorem_tag = "squares";
    Vec radii_list;
    double lhs = 0;
    for (const PointBody& b : bodies) {
        const double ri = min_enclosing_ball(b).radius;
        radii_list.push_back(ri);
        lhs += ri * ri;
    }
    const double rsum = min_enclosing_ball(minkowski_sum(bodies, max_sum_points)).radius;
    r.lhs = lhs;
    r.rhs = rsum * rsum;
    r.artifacts["bodies"] = detail::bodies_artifact(bodies);
    r.artifacts["radii"] = radii_list;
    r.artifacts["sum_radius"] = rsum;
    r.finish();
    return r;
}

/// sum_i R(K_i, C) <= j * R(sum K_i, C) for an arbitrary gauge C.
inline InstanceReport check_factor_j_gauge(const std::vector<PointBody>& bodies, const Gauge& gauge,
                                           std::int64_t id = 0, std::uint64_t seed = 0,
                                           std::size_t max_sum_points = default_max_sum_points) {
    detail::require_common_dim(bodies, "check_factor_j_gauge");
    InstanceReport r;
    r.instance_id = id;
    r.seed = seed;
    r.theorem_tag = "factor-j";
    Vec radii_list;
    double lhs = 0;
    for (const PointBody& b : bodies) {
        const double ri = circumradius(b, gauge).radius;
        radii_list.push_back(ri);
        lhs += ri;
    }
    const double rsum = circumradius(minkowski_sum(bodies, max_sum_points), gauge).radius;
    r.lhs = lhs;
    r.rhs = static_cast<double>(bodies.size()) * rsum;
    r.artifacts["bodies"] = detail::bodies_artifact(bodies);
    r.artifacts["gauge"] = gauge_to_json(gauge);
    r.artifacts["radii"] = radii_list;
    r.artifacts["sum_radius"] = rsum;
    r.finish();
    return r;
}

/// max_i R(K_i, C) <= R(sum K_i, C).
inline InstanceReport check_max_lower_bound(const std::vector<PointBody>& bodies, const Gauge& gauge,
                                            std::int64_t id = 0, std::uint64_t seed = 0,
                                            std::size_t max_sum_points = default_max_sum_points) {
    detail::require_common_dim(bodies, "check_max_lower_bound");
    InstanceReport r;
    r.instance_id = id;
    r.seed = seed;
    r.theorem_tag = "max-bound";
    Vec radii_list;
    double lhs = 0;
    for (const PointBody& b : bodies) {
        const double ri = circumradius(b, gauge).radius;
        radii_list.push_back(ri);
        lhs = std::max(lhs, ri);
    }
    const double rsum = circumradius(minkowski_sum(bodies, max_sum_points), gauge).radius;
    r.lhs = lhs;
    r.rhs = rsum;
    r.artifacts["bodies"] = detail::bodies_artifact(bodies);
    r.artifacts["gauge"] = gauge_to_json(gauge);
    r.artifacts["radii"] = radii_list;
    r.artifacts["sum_radius"] = rsum;
    r.finish();
    return r;
}

/// Three planar bodies of Euclidean circumradius 1 inside the unit disk:
/// R(K_1+K_2+K_3) >= 2. On equality, the extracted unit-sphere witness sets
/// are run through the hexagon detector and each body is tested for the
/// corresponding diameter segment.
inline InstanceReport check_planar_three(const std::vector<PointBody>& bodies, std::int64_t id = 0,
                                         std::uint64_t seed = 0) {
    if (bodies.size() != 3) throw InputError("check_planar_three: exactly three bodies required");
    for (std::size_t i = 0; i < 3; ++i) {
        if (bodies[i].dim != 2) throw InputError("check_planar_three: body " + std::to_string(i) + " is not planar");
        for (const Vec& p : bodies[i].points)
            if (norm2(p) > 1.0 + eps_cert)
                throw InputError("check_planar_three: body " + std::to_string(i) + " leaves the unit disk");
    }
    std::vector<CircumResult> results;
    for (std::size_t i = 0; i < 3; ++i) {
        results.push_back(circumradius(bodies[i], EuclideanBall{}));
        if (std::fabs(results[i].radius - 1.0) > eps_eq)
            throw InputError("check_planar_three: body " + std::to_string(i) + " has circumradius " +
                             std::to_string(results[i].radius) + ", expected 1");
    }
    InstanceReport r;
    r.instance_id = id;
    r.seed = seed;
    r.theorem_tag = "planar-three";
    r.lhs = 2.0;
    r.rhs = min_enclosing_ball(minkowski_sum(bodies)).radius;
    r.artifacts["bodies"] = detail::bodies_artifact(bodies);
    r.artifacts["sum_radius"] = r.rhs;
    r.finish();
    r.pass = r.rhs >= 2.0 - eps_feas;  // one-sided bound
    if (r.equality_flag) {
        std::vector<BalancedSet> witness;
        jsonv sets_json = jsonv::array();
        jsonv contains = jsonv::array();
        bool have_all = true;
        for (std::size_t i = 0; i < 3; ++i) {
            Certificate cert = extract_certificate(bodies[i], EuclideanBall{}, results[i]);
            witness.emplace_back(2, 1.0, cert.normals, cert.weights);
            jsonv js;
            js["vectors"] = cert.normals;
            js["lambdas"] = cert.weights;
            sets_json.push_back(std::move(js));
            if (cert.normals.size() == 2) {
                const bool inside = in_convex_hull(bodies[i].points, cert.normals[0]).inside &&
                                    in_convex_hull(bodies[i].points, neg(cert.normals[0])).inside;
                contains.push_back(inside);
            } else {
                contains.push_back(false);
                have_all = false;
            }
        }
        r.artifacts["witness_sets"] = sets_json;
        r.artifacts["hexagon_equality"] = detect_hexagon_equality(witness);
        r.artifacts["contains_diameter_segment"] = contains;
        r.artifacts["all_witnesses_antipodal"] = have_all;
    }
    return r;
}

// ---- factor-j equality: polyhedral cylinders ------------------------------

struct HalfspaceSet {
    std::vector<Vec> normals;
    Vec offsets;  // g.x <= offset rows; a cylinder when the normals do not span
};

struct CylinderVerdict {
    enum class Value { yes, no, inconclusive } verdict = Value::inconclusive;
    std::string reason;
    std::vector<HalfspaceSet> cylinders;  // in the input coordinate frame
    bool unit_radii_ok = false;           // (a) R(K_i, C_i) = 1
    bool orthogonality_ok = false;        // (b) facets parallel to the complementary sum
    bool sandwich_ok = false;             // (c) sum K in z + lambda C in all cylinders
};

/// Equality analysis for the factor-j bound: build candidate cylinders from
/// the per-body containment certificates and verify the three structural
/// conditions of the equality characterization.
inline CylinderVerdict check_cylinder_equality(const std::vector<PointBody>& bodies, const Gauge& gauge,
                                               const InstanceReport& result, double tol = eps_eq) {
    if (result.theorem_tag != "factor-j" || !result.equality_flag)
        throw InputError("check_cylinder_equality: needs an equality-flagged factor-j report");
    detail::require_common_dim(bodies, "check_cylinder_equality");
    const int n = bodies[0].dim;
    CylinderVerdict out;

    std::vector<CircumResult> res;
    std::vector<Certificate> certs;
    for (const PointBody& b : bodies) {
        res.push_back(circumradius(b, gauge));
        if (res.back().radius <= eps_pos) {
            out.reason = "a summand has radius 0; no certificate exists";
            return out;
        }
        try {
            certs.push_back(extract_certificate(b, gauge, res.back()));
        } catch (const NoCertificate&) {
            out.reason = "certificate unavailable";
            return out;
        }
        if (certs.back().approximate) {
            out.reason = "only an approximate certificate is available for this gauge";
            return out;
        }
    }

    // Candidate cylinder i (body frame): intersection of the certificate's
    // supporting halfspaces g.x <= g.(p - z_i); always contains R_i * C.
    std::vector<HalfspaceSet> centered(bodies.size());
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (std::size_t l = 0; l < certs[i].normals.size(); ++l) {
            const Vec& g = certs[i].normals[l];
            const double beta = dot(g, sub(certs[i].touch_points[l], res[i].center));
            if (beta <= eps_pos) {
                out.reason = "degenerate supporting halfspace in certificate";
                return out;
            }
            centered[i].normals.push_back(g);
            centered[i].offsets.push_back(beta);
        }
    }

    // (a) unit circumradius of each body w.r.t. its cylinder.
    out.unit_radii_ok = true;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        std::vector<Vec> rows;
        for (std::size_t l = 0; l < centered[i].normals.size(); ++l)
            rows.push_back(scaled(centered[i].normals[l], 1.0 / centered[i].offsets[l]));
        const auto o = detail::circumradius_rows(translated(bodies[i], neg(res[i].center)), rows);
        if (std::fabs(o.radius - 1.0) > tol) out.unit_radii_ok = false;
    }

    // (b) cylinder facets parallel to the affine hull of the other summands.
    out.orthogonality_ok = true;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (const Vec& g : centered[i].normals) {
            const double gn = norm2(g);
            for (std::size_t t = 0; t < bodies.size(); ++t) {
                if (t == i) continue;
                const Vec& v0 = bodies[t].points[0];
                for (const Vec& v : bodies[t].points) {
                    const Vec d = sub(v, v0);
                    const double dn = norm2(d);
                    if (dn < eps_pos) continue;
                    if (std::fabs(dot(g, d)) > tol * gn * dn) out.orthogonality_ok = false;
                }
            }
        }
    }

    // (c) sandwich: sum K in z + lambda C in every (translated) cylinder,
    // with (z, lambda) from the circumradius of the sum.
    PointBody sum = minkowski_sum(bodies);
    const CircumResult sum_res = circumradius(sum, gauge);
    out.sandwich_ok = true;
    for (const Vec& v : sum.points)
        if (gauge_value(gauge, sub(v, sum_res.center)) > sum_res.radius * (1.0 + tol) + tol)
            out.sandwich_ok = false;
    auto gauge_support = [&](const Vec& dir) {
        if (std::holds_alternative<EuclideanBall>(gauge)) return norm2(dir);
        if (const auto* lp = std::get_if<LpBall>(&gauge)) {
            const double p = lp->p;
            const double q = std::isinf(p) ? 1.0 : p == 1.0 ? std::numeric_limits<double>::infinity()
                                                            : p / (p - 1.0);
            return lp_norm(dir, q);  // dual norm
        }
        return std::get<HPolytope>(gauge).support(dir);
    };
    out.cylinders.assign(bodies.size(), {});
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (std::size_t l = 0; l < centered[i].normals.size(); ++l) {
            const Vec& g = centered[i].normals[l];
            // cylinder translated to the sum's center: g.(x - z_sum) <= beta
            const double offset = centered[i].offsets[l] + dot(g, sum_res.center);
            out.cylinders[i].normals.push_back(g);
            out.cylinders[i].offsets.push_back(offset);
            const double lhs = dot(g, sum_res.center) + sum_res.radius * gauge_support(g);
            if (lhs > offset + tol * std::max(1.0, std::fabs(offset))) out.sandwich_ok = false;
        }
    }

    if (out.unit_radii_ok && out.orthogonality_ok && out.sandwich_ok) {
        out.verdict = CylinderVerdict::Value::yes;
        out.reason = "certificate cylinders satisfy all three equality conditions";
    } else {
        out.verdict = CylinderVerdict::Value::no;
        out.reason = "a structural condition failed; see flags";
    }
    return out;
}

// ---- replay ---------------------------------------------------------------

/// Recompute lhs/rhs of a report from its embedded artifacts.
inline std::pair<double, double> replay_instance(const InstanceReport& r) {
    std::vector<PointBody> bodies;
    for (const jsonv& jb : r.artifacts.at("bodies")) bodies.push_back(parse_body(jb));
    if (r.theorem_tag == "sqrt-j") {
        InstanceReport rr = check_sqrt_j(bodies);
        return {rr.lhs, rr.rhs};
    }
    if (r.theorem_tag == "squares") {
        InstanceReport rr = check_sum_of_squares(bodies);
        return {rr.lhs, rr.rhs};
    }
    if (r.theorem_tag == "factor-j") {
        InstanceReport rr = check_factor_j_gauge(bodies, parse_gauge(r.artifacts.at("gauge")));
        return {rr.lhs, rr.rhs};
    }
    if (r.theorem_tag == "max-bound") {
        InstanceReport rr = check_max_lower_bound(bodies, parse_gauge(r.artifacts.at("gauge")));
        return {rr.lhs, rr.rhs};
    }
    if (r.theorem_tag == "planar-three") {
        InstanceReport rr = check_planar_three(bodies);
        return {rr.lhs, rr.rhs};
    }
    throw InputError("replay_instance: unknown theorem tag " + r.theorem_tag);
}

}  // namespace radii
