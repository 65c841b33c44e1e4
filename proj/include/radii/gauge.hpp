#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>

#include "radii/errors.hpp"
#include "radii/hpolytope.hpp"
#include "radii/vec.hpp"

namespace radii {

struct EuclideanBall {};

struct LpBall {
    double p = 2.0;  // p >= 1; +infinity encodes the max norm
    explicit LpBall(double pp) : p(pp) {
        if (!(p >= 1.0)) throw InputError("LpBall: p must be >= 1");
    }
};

/// The gauge body C: unit ball of the containment measure. Polytopes are
/// stored normalized (a_i.x <= 1, origin interior).
using Gauge = std::variant<EuclideanBall, LpBall, HPolytope>;

inline std::string gauge_name(const Gauge& g) {
    if (std::holds_alternative<EuclideanBall>(g)) return "euclidean";
    if (const auto* lp = std::get_if<LpBall>(&g))
        return std::isinf(lp->p) ? "lp(inf)" : "lp(" + std::to_string(lp->p) + ")";
    return "hpoly";
}

/// Minkowski functional gamma_C(x): smallest t >= 0 with x in t*C.
inline double gauge_value(const Gauge& g, const Vec& x) {
    if (std::holds_alternative<EuclideanBall>(g)) return norm2(x);
    if (const auto* lp = std::get_if<LpBall>(&g)) return lp_norm(x, lp->p);
    return std::get<HPolytope>(g).gauge(x);
}

namespace detail {

inline HPolytope cube_polytope(int n) {
    std::vector<Vec> a;
    Vec b;
    for (int d = 0; d < n; ++d) {
        a.push_back(unit_axis(n, d, 1.0));
        a.push_back(unit_axis(n, d, -1.0));
        b.push_back(1.0);
        b.push_back(1.0);
    }
    return HPolytope(n, a, b, /*check_bounded=*/false);
}

inline HPolytope cross_polytope(int n) {
    if (n > 10) throw InputError("l1 gauge: facet enumeration limited to dimension <= 10");
    std::vector<Vec> a;
    Vec b;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Vec row(n);
        for (int d = 0; d < n; ++d) row[d] = (mask >> d) & 1u ? -1.0 : 1.0;
        a.push_back(std::move(row));
        b.push_back(1.0);
    }
    return HPolytope(n, a, b, /*check_bounded=*/false);
}

}  // namespace detail

/// Facet representation when the gauge is polyhedral (hpoly, p=1, p=inf).
inline std::optional<HPolytope> polyhedral_form(const Gauge& g, int dim) {
    if (const auto* poly = std::get_if<HPolytope>(&g)) {
        if (poly->dim != dim) throw InputError("gauge: dimension mismatch");
        return *poly;
    }
    if (const auto* lp = std::get_if<LpBall>(&g)) {
        if (std::isinf(lp->p)) return detail::cube_polytope(dim);
        if (lp->p == 1.0) return detail::cross_polytope(dim);
    }
    return std::nullopt;
}

}  // namespace radii
