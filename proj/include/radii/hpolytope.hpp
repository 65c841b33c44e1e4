#pragma once

#include <cmath>
#include <vector>

#include "radii/errors.hpp"
#include "radii/lp.hpp"
#include "radii/rng.hpp"
#include "radii/vec.hpp"

namespace radii {

/// H-polytope {x : a_i.x <= 1} with the origin strictly interior and rows
/// rescaled to right-hand side 1 on construction. Construction verifies
/// boundedness by maximizing along +-e_i and n+1 seeded random directions.
struct HPolytope {
    int dim = 0;
    std::vector<Vec> normals;  // rows a_i, rhs implicitly 1

    HPolytope() = default;

    HPolytope(int n, const std::vector<Vec>& a, const Vec& b, bool check_bounded = true) : dim(n) {
        if (n < 1) throw InputError("HPolytope: dimension must be >= 1");
        if (a.size() != b.size() || a.empty()) throw InputError("HPolytope: rows/rhs size mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(a[i].size()) != n) throw InputError("HPolytope: row dimension mismatch");
            require_finite(a[i], "HPolytope row");
            if (!std::isfinite(b[i])) throw InputError("HPolytope: non-finite rhs");
            if (norm2(a[i]) <= 0) throw InputError("HPolytope: zero normal row");
            if (b[i] <= 0) throw InputError("HPolytope: origin not interior");
            normals.push_back(scaled(a[i], 1.0 / b[i]));
        }
        if (check_bounded && !bounded()) throw InputError("HPolytope: unbounded");
    }

    /// Minkowski functional of the polytope: gamma(x) = max_i a_i.x.
    double gauge(const Vec& x) const {
        double g = 0;
        for (const Vec& a : normals) g = std::max(g, dot(a, x));
        return g;
    }

    /// Support function h(dir) = max {dir.x : x in polytope}, by LP.
    double support(const Vec& dir) const {
        std::vector<LpRow> rows;
        rows.reserve(normals.size());
        for (const Vec& a : normals) rows.push_back({a, Relation::le, 1.0});
        LPSolution s = solve_lp(dir, rows, Sense::maximize);
        if (s.status == LpStatus::unbounded) throw InputError("HPolytope: unbounded support");
        if (s.status != LpStatus::optimal) throw SolverFailure("HPolytope: support LP failed");
        return s.objective;
    }

private:
    bool bounded() const {
        std::vector<LpRow> rows;
        for (const Vec& a : normals) rows.push_back({a, Relation::le, 1.0});
        auto finite_max = [&](const Vec& dir) {
            LPSolution s = solve_lp(dir, rows, Sense::maximize);
            if (s.status == LpStatus::infeasible) throw SolverFailure("HPolytope: empty despite interior origin");
            return s.status == LpStatus::optimal;
        };
        for (int i = 0; i < dim; ++i) {
            if (!finite_max(unit_axis(dim, i, 1.0))) return false;
            if (!finite_max(unit_axis(dim, i, -1.0))) return false;
        }
        Rng rng(0x7075bull);  // fixed: construction must be deterministic
        for (int k = 0; k < dim + 1; ++k)
            if (!finite_max(rng.unit_vec(dim))) return false;
        return true;
    }
};

}  // namespace radii
