#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "radii/lp.hpp"
#include "radii/rng.hpp"
#include "radii/vec.hpp"

namespace radii {

struct MinimaxResult {
    Vec center;
    double value = 0.0;
    int iterations = 0;
};

namespace detail {

/// Value and one subgradient of z -> max_i |p_i - z|_p (ties to lowest index).
inline std::pair<double, Vec> pnorm_max_eval(const std::vector<Vec>& pts, double p, const Vec& z) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double v = lp_norm(sub(pts[i], z), p);
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    Vec x = sub(pts[arg], z);
    Vec g(z.size(), 0.0);
    if (best > 1e-300) {
        if (std::isinf(p)) {
            std::size_t k = 0;
            for (std::size_t d = 1; d < x.size(); ++d)
                if (std::fabs(x[d]) > std::fabs(x[k])) k = d;
            g[k] = x[k] > 0 ? -1.0 : 1.0;
        } else {
            for (std::size_t d = 0; d < x.size(); ++d) {
                const double r = std::fabs(x[d]) / best;
                g[d] = -(x[d] > 0 ? 1.0 : x[d] < 0 ? -1.0 : 0.0) * std::pow(r, p - 1.0);
            }
        }
    }
    return {best, std::move(g)};
}

/// Kelley cutting planes with a shrinking box trust region around the best
/// iterate. The model is a global underestimator, so the model gap bounds the
/// suboptimality inside the box.
inline MinimaxResult cutting_plane_minimax(const std::vector<Vec>& pts, double p, Vec start,
                                           int max_iters = 400, double f_tol = 1e-12) {
    const std::size_t n = start.size();
    Vec lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
    for (const Vec& q : pts)
        for (std::size_t d = 0; d < n; ++d) {
            lo[d] = std::min(lo[d], q[d]);
            hi[d] = std::max(hi[d], q[d]);
        }
    double box = 1.0;
    for (std::size_t d = 0; d < n; ++d) box = std::max(box, hi[d] - lo[d]);

    auto [fbest, g0] = pnorm_max_eval(pts, p, start);
    Vec zbest = start;
    std::vector<Vec> cut_g{g0};
    Vec cut_h{fbest - dot(g0, start)};
    MinimaxResult res{zbest, fbest, 0};
    for (int it = 0; it < max_iters; ++it) {
        res.iterations = it + 1;
        LpProblem lp;  // vars: z (n, free), t (free); min t
        lp.c.assign(n + 1, 0.0);
        lp.c[n] = 1.0;
        for (std::size_t j = 0; j < cut_g.size(); ++j) {
            LpRow row;  // g.z - t <= -h
            row.a = cut_g[j];
            row.a.push_back(-1.0);
            row.rel = Relation::le;
            row.b = -cut_h[j];
            lp.rows.push_back(std::move(row));
        }
        for (std::size_t d = 0; d < n; ++d) {
            LpRow hi_row, lo_row;
            hi_row.a.assign(n + 1, 0.0);
            hi_row.a[d] = 1.0;
            hi_row.b = zbest[d] + box;
            lo_row.a.assign(n + 1, 0.0);
            lo_row.a[d] = -1.0;
            lo_row.b = box - zbest[d];
            lp.rows.push_back(std::move(hi_row));
            lp.rows.push_back(std::move(lo_row));
        }
        LPSolution s = solve_lp(lp);
        if (s.status != LpStatus::optimal) break;
        Vec zc(s.x.begin(), s.x.begin() + n);
        const double model = s.x[n];
        auto [fc, gc] = pnorm_max_eval(pts, p, zc);
        cut_g.push_back(gc);
        cut_h.push_back(fc - dot(gc, zc));
        if (fc < fbest - 1e-15) {
            fbest = fc;
            zbest = zc;
        } else {
            box *= 0.5;
        }
        if (fbest - model <= f_tol * (1.0 + std::fabs(fbest)) || box < 1e-10) break;
        if (cut_g.size() > 700) {  // keep the LP small; drop the oldest cuts
            cut_g.erase(cut_g.begin(), cut_g.begin() + 200);
            cut_h.erase(cut_h.begin(), cut_h.begin() + 200);
        }
    }
    res.center = zbest;
    res.value = fbest;
    return res;
}

/// Subgradient descent with an adaptive Polyak step on the max-active point.
inline MinimaxResult subgradient_minimax(const std::vector<Vec>& pts, double p, Vec z,
                                         int max_iters = 4000) {
    double diam = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            diam = std::max(diam, lp_norm(sub(pts[i], pts[j]), p));
    const double f_lower = diam / 2.0;  // valid by the triangle inequality

    auto [fbest, g] = pnorm_max_eval(pts, p, z);
    Vec zbest = z;
    double delta = std::max(1e-3, 0.05 * fbest);
    double window_best = fbest;
    int it = 0, since_check = 0;
    for (; it < max_iters; ++it) {
        auto [f, grad] = pnorm_max_eval(pts, p, z);
        if (f < fbest) {
            fbest = f;
            zbest = z;
        }
        const double gn2 = norm2sq(grad);
        if (gn2 < 1e-24) break;
        const double target = std::max(f_lower, fbest - delta);
        const double step = std::max(0.0, (f - target)) / gn2;
        axpy(z, -step, grad);
        if (++since_check >= 50) {  // improvement < 1e-10 over 50 iters: tighten or stop
            if (window_best - fbest < 1e-10) {
                delta *= 0.5;
                if (delta < 1e-9) break;
            }
            window_best = fbest;
            since_check = 0;
        }
    }
    return {zbest, fbest, it};
}

}  // namespace detail

/// Minimize z -> max_i |p_i - z|_p for p in (1, inf]. Multi-start subgradient
/// descent (centroid plus four seeded perturbations) followed by a
/// cutting-plane refinement from the best incumbent.
inline MinimaxResult minimize_pnorm_max(const std::vector<Vec>& pts, double p) {
    const std::size_t n = pts[0].size();
    Vec centroid(n, 0.0);
    for (const Vec& q : pts) axpy(centroid, 1.0 / pts.size(), q);
    double spread = 1e-3;
    for (const Vec& q : pts) spread = std::max(spread, norm2(sub(q, centroid)));

    Rng rng(0xba11ull);  // fixed seed: results must be deterministic
    MinimaxResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 5; ++s) {
        Vec start = centroid;
        if (s > 0) axpy(start, 0.25 * spread, rng.unit_vec(n));
        MinimaxResult r = detail::subgradient_minimax(pts, p, start);
        if (r.value < best.value) best = r;
    }
    MinimaxResult refined = detail::cutting_plane_minimax(pts, p, best.center);
    return refined.value < best.value ? refined : best;
}

}  // namespace radii
