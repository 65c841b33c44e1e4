#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "radii/errors.hpp"
#include "radii/linalg.hpp"
#include "radii/lp.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

struct HullWitness {
    bool inside = false;
    Vec weights;     // convex weights over all points (inside case)
    Vec separator;   // direction a with a.target > max_i a.p_i (outside case)
    double margin = 0.0;  // box-normalized separation margin
    double residual = 0.0;
};

namespace detail {

/// Best convex-combination fit: min |sum w_i p_i - target|_1 over the simplex.
inline std::pair<Vec, double> convex_fit(const std::vector<Vec>& points, const Vec& target) {
    const std::size_t k = points.size(), n = target.size();
    // variables: w_0..w_{k-1}, s+_0.., s-_0..  all nonnegative
    const std::size_t nvar = k + 2 * n;
    LpProblem p;
    p.c.assign(nvar, 0.0);
    for (std::size_t j = k; j < nvar; ++j) p.c[j] = 1.0;
    p.nonneg.assign(nvar, true);
    p.sense = Sense::minimize;
    for (std::size_t d = 0; d < n; ++d) {
        LpRow row;
        row.a.assign(nvar, 0.0);
        for (std::size_t j = 0; j < k; ++j) row.a[j] = points[j][d];
        row.a[k + d] = 1.0;
        row.a[k + n + d] = -1.0;
        row.rel = Relation::eq;
        row.b = target[d];
        p.rows.push_back(std::move(row));
    }
    LpRow simplex_row;
    simplex_row.a.assign(nvar, 0.0);
    for (std::size_t j = 0; j < k; ++j) simplex_row.a[j] = 1.0;
    simplex_row.rel = Relation::eq;
    simplex_row.b = 1.0;
    p.rows.push_back(std::move(simplex_row));
    LPSolution s = solve_lp(p);
    if (s.status != LpStatus::optimal) throw SolverFailure("convex_fit: LP did not solve");
    Vec w(s.x.begin(), s.x.begin() + k);
    for (double& wi : w) wi = std::max(wi, 0.0);
    const double tot = std::accumulate(w.begin(), w.end(), 0.0);
    if (tot > 0) for (double& wi : w) wi /= tot;
    return {std::move(w), s.objective};
}

/// Separating direction via max margin delta s.t. a.(target - p_i) >= delta,
/// |a|_inf <= 1. Positive optimum certifies target outside the hull.
inline std::pair<Vec, double> separator(const std::vector<Vec>& points, const Vec& target) {
    const std::size_t n = target.size();
    LpProblem p;
    p.c.assign(n + 1, 0.0);
    p.c[n] = 1.0;
    p.sense = Sense::maximize;
    for (const Vec& pt : points) {
        LpRow row;  // (p_i - target).a + delta <= 0
        row.a = sub(pt, target);
        row.a.push_back(1.0);
        row.rel = Relation::le;
        row.b = 0.0;
        p.rows.push_back(std::move(row));
    }
    for (std::size_t d = 0; d < n; ++d) {
        LpRow hi, lo;
        hi.a.assign(n + 1, 0.0);
        hi.a[d] = 1.0;
        hi.b = 1.0;
        lo.a.assign(n + 1, 0.0);
        lo.a[d] = -1.0;
        lo.b = 1.0;
        p.rows.push_back(std::move(hi));
        p.rows.push_back(std::move(lo));
    }
    LPSolution s = solve_lp(p);
    if (s.status != LpStatus::optimal) throw SolverFailure("separator: LP did not solve");
    Vec a(s.x.begin(), s.x.begin() + n);
    return {std::move(a), s.objective};
}

}  // namespace detail

/// LP-certified membership of target in conv(points).
inline HullWitness in_convex_hull(const std::vector<Vec>& points, const Vec& target,
                                  double tol = 10 * eps_feas) {
    if (points.empty()) throw InputError("in_convex_hull: empty point list");
    for (const Vec& p : points) require_same_dim(p, target, "in_convex_hull");
    HullWitness w;
    auto [weights, residual] = detail::convex_fit(points, target);
    w.residual = residual;
    if (residual <= tol) {
        w.inside = true;
        w.weights = std::move(weights);
        return w;
    }
    auto [a, margin] = detail::separator(points, target);
    w.inside = false;
    w.separator = std::move(a);
    w.margin = margin;
    return w;
}

struct ConvexCombination {
    std::vector<std::size_t> indices;
    Vec weights;  // strictly positive, sum 1, pairs with indices
};

/// Express target as a convex combination of at most n+1 of the given points
/// with strictly positive weights. Throws NotInHull (with separator) if the
/// target is not in the hull within tolerance.
inline ConvexCombination caratheodory_reduce(const std::vector<Vec>& points, const Vec& target) {
    const std::size_t n = target.size();
    HullWitness w = in_convex_hull(points, target);
    if (!w.inside)
        throw NotInHull("caratheodory_reduce: target not in convex hull", w.separator, w.margin);

    std::vector<std::size_t> idx;
    Vec wt;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (w.weights[i] > 1e-14) {
            idx.push_back(i);
            wt.push_back(w.weights[i]);
        }
    }
    if (idx.empty()) throw SolverFailure("caratheodory_reduce: degenerate weight vector");

    // Eliminate affine dependencies until at most n+1 points carry weight.
    while (idx.size() > n + 1) {
        detail::Matrix m(n + 1, Vec(idx.size(), 0.0));
        for (std::size_t j = 0; j < idx.size(); ++j) {
            for (std::size_t d = 0; d < n; ++d) m[d][j] = points[idx[j]][d];
            m[n][j] = 1.0;
        }
        Vec mu = detail::null_vector(std::move(m));
        if (mu.empty()) break;  // affinely independent; cannot reduce further
        double maxpos = 0;
        for (double v : mu) maxpos = std::max(maxpos, v);
        if (maxpos <= 0) for (double& v : mu) v = -v;
        double t = std::numeric_limits<double>::infinity();
        std::size_t drop = SIZE_MAX;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (mu[j] > 1e-13) {
                const double r = wt[j] / mu[j];
                if (r < t - 1e-15) {
                    t = r;
                    drop = j;
                }
            }
        }
        if (drop == SIZE_MAX) break;
        for (std::size_t j = 0; j < idx.size(); ++j) wt[j] -= t * mu[j];
        wt[drop] = 0.0;
        std::vector<std::size_t> nidx;
        Vec nwt;
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (wt[j] > 1e-14) {
                nidx.push_back(idx[j]);
                nwt.push_back(wt[j]);
            }
        if (nidx.empty()) throw SolverFailure("caratheodory_reduce: elimination emptied support");
        idx = std::move(nidx);
        wt = std::move(nwt);
    }

    // Drop sub-eps_pos weights (their contribution is below eps_feas).
    std::vector<std::size_t> fidx;
    Vec fwt;
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (wt[j] > eps_pos) {
            fidx.push_back(idx[j]);
            fwt.push_back(wt[j]);
        }
    const double tot = std::accumulate(fwt.begin(), fwt.end(), 0.0);
    if (tot <= 0) throw SolverFailure("caratheodory_reduce: all weights vanished");
    for (double& v : fwt) v /= tot;

    Vec recon(n, 0.0);
    for (std::size_t j = 0; j < fidx.size(); ++j) axpy(recon, fwt[j], points[fidx[j]]);
    if (dist2(recon, target) > 100 * eps_feas)
        throw SolverFailure("caratheodory_reduce: reduced combination drifted off target");
    return {std::move(fidx), std::move(fwt)};
}

}  // namespace radii
