#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "radii/balanced.hpp"
#include "radii/body.hpp"
#include "radii/caratheodory.hpp"
#include "radii/circumradius.hpp"
#include "radii/gauge.hpp"
#include "radii/json_out.hpp"
#include "radii/lp.hpp"

namespace radii {

namespace detail {

inline double number_at(const jsonv& j, const std::string& where) {
    if (!j.is_number()) throw InputError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(where + ": non-finite number");
    return v;
}

inline Vec vec_at(const jsonv& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array");
    Vec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(number_at(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline std::vector<Vec> matrix_at(const jsonv& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of arrays");
    std::vector<Vec> m;
    m.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        m.push_back(vec_at(j[i], where + "[" + std::to_string(i) + "]"));
    return m;
}

}  // namespace detail

// ---- bodies -----------------------------------------------------------

inline PointBody parse_body(const jsonv& j) {
    if (!j.is_object()) throw InputError("body: expected an object");
    if (!j.contains("dim") || !j.contains("points"))
        throw InputError("body: required keys are \"dim\" and \"points\"");
    const int dim = j["dim"].is_number_integer() ? j["dim"].get<int>()
                                                 : static_cast<int>(detail::number_at(j["dim"], "body.dim"));
    return PointBody(dim, detail::matrix_at(j["points"], "body.points"));
}

inline jsonv body_to_json(const PointBody& b) {
    jsonv j;
    j["dim"] = b.dim;
    j["points"] = b.points;
    return j;
}

// ---- gauges -----------------------------------------------------------

inline Gauge parse_gauge(const jsonv& j) {
    if (!j.is_object() || !j.contains("type")) throw InputError("gauge: expected {\"type\": ...}");
    const std::string type = j["type"].get<std::string>();
    if (type == "euclidean") return EuclideanBall{};
    if (type == "lp") {
        if (!j.contains("p")) throw InputError("gauge: lp requires \"p\"");
        if (j["p"].is_string()) {
            if (j["p"].get<std::string>() != "inf") throw InputError("gauge: lp p must be a number or \"inf\"");
            return LpBall(std::numeric_limits<double>::infinity());
        }
        return LpBall(detail::number_at(j["p"], "gauge.p"));
    }
    if (type == "hpoly") {
        if (!j.contains("A") || !j.contains("b")) throw InputError("gauge: hpoly requires \"A\" and \"b\"");
        const std::vector<Vec> a = detail::matrix_at(j["A"], "gauge.A");
        const Vec b = detail::vec_at(j["b"], "gauge.b");
        return HPolytope(static_cast<int>(a[0].size()), a, b);
    }
    throw InputError("gauge: unknown type \"" + type + "\"");
}

inline jsonv gauge_to_json(const Gauge& g) {
    jsonv j;
    if (std::holds_alternative<EuclideanBall>(g)) {
        j["type"] = "euclidean";
    } else if (const auto* lp = std::get_if<LpBall>(&g)) {
        j["type"] = "lp";
        if (std::isinf(lp->p))
            j["p"] = "inf";
        else
            j["p"] = lp->p;
    } else {
        const HPolytope& poly = std::get<HPolytope>(g);
        j["type"] = "hpoly";
        j["A"] = poly.normals;
        j["b"] = Vec(poly.normals.size(), 1.0);
    }
    return j;
}

// ---- balanced-set files ------------------------------------------------

struct SetsInput {
    int dim = 0;
    Vec c;
    std::vector<BalancedSet> sets;
};

namespace detail {

/// Strictly positive balance over all vectors if one exists, otherwise the
/// reduced support combination; NotInHull propagates when 0 is outside.
inline BalancedSet balance_from_vectors(int dim, double radius, const std::vector<Vec>& vectors) {
    const std::size_t k = vectors.size();
    LpProblem p;  // min sum(lambda) s.t. sum lambda_l u_l = 0, lambda_l >= 1
    p.c.assign(k, 1.0);
    p.nonneg.assign(k, true);
    for (int d = 0; d < dim; ++d) {
        LpRow row;
        row.a.assign(k, 0.0);
        for (std::size_t l = 0; l < k; ++l) row.a[l] = vectors[l][d];
        row.rel = Relation::eq;
        row.b = 0.0;
        p.rows.push_back(std::move(row));
    }
    for (std::size_t l = 0; l < k; ++l) {
        LpRow row;
        row.a.assign(k, 0.0);
        row.a[l] = 1.0;
        row.rel = Relation::ge;
        row.b = 1.0;
        p.rows.push_back(std::move(row));
    }
    LPSolution s = solve_lp(p);
    if (s.status == LpStatus::optimal) {
        double tot = 0;
        for (double v : s.x) tot += v;
        Vec lam = s.x;
        for (double& v : lam) v /= tot;
        return BalancedSet(dim, radius, vectors, std::move(lam));
    }
    ConvexCombination cc = caratheodory_reduce(vectors, zeros(dim));
    std::vector<Vec> kept;
    for (std::size_t idx : cc.indices) kept.push_back(vectors[idx]);
    return BalancedSet(dim, radius, std::move(kept), cc.weights);
}

}  // namespace detail

inline SetsInput parse_sets(const jsonv& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("sets"))
        throw InputError("sets: required keys are \"dim\" and \"sets\"");
    SetsInput out;
    out.dim = j["dim"].get<int>();
    if (out.dim < 1) throw InputError("sets: dim must be >= 1");
    out.c = j.contains("c") ? detail::vec_at(j["c"], "sets.c") : zeros(out.dim);
    if (static_cast<int>(out.c.size()) != out.dim) throw InputError("sets: c dimension mismatch");
    if (!j["sets"].is_array() || j["sets"].empty()) throw InputError("sets: \"sets\" must be nonempty");
    for (std::size_t i = 0; i < j["sets"].size(); ++i) {
        const jsonv& js = j["sets"][i];
        const std::string where = "sets[" + std::to_string(i) + "]";
        const double radius = js.contains("radius") ? detail::number_at(js["radius"], where + ".radius") : 1.0;
        std::vector<Vec> vectors = detail::matrix_at(js["vectors"], where + ".vectors");
        if (js.contains("lambdas")) {
            out.sets.emplace_back(out.dim, radius, std::move(vectors),
                                  detail::vec_at(js["lambdas"], where + ".lambdas"));
        } else {
            out.sets.push_back(detail::balance_from_vectors(out.dim, radius, vectors));
        }
    }
    return out;
}

inline jsonv sets_to_json(const SetsInput& in) {
    jsonv j;
    j["dim"] = in.dim;
    j["c"] = in.c;
    j["sets"] = jsonv::array();
    for (const BalancedSet& s : in.sets) {
        jsonv js;
        js["radius"] = s.radius;
        js["vectors"] = s.vectors;
        js["lambdas"] = s.lambdas;
        j["sets"].push_back(std::move(js));
    }
    return j;
}

inline jsonv certificate_to_json(const Certificate& c) {
    jsonv j;
    j["touch_points"] = c.touch_points;
    j["normals"] = c.normals;
    j["weights"] = c.weights;
    j["approximate"] = c.approximate;
    return j;
}

}  // namespace radii
