#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "radii/body.hpp"
#include "radii/linalg.hpp"
#include "radii/minimax.hpp"
#include "radii/rng.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

/// Euclidean minimum enclosing ball. `support` lists (ascending) the indices
/// of all input points lying on the sphere within eps_cert; the center is a
/// convex combination of those points.
struct Ball {
    Vec center;
    double radius = 0.0;
    std::vector<std::size_t> support;
};

enum class MebMethod { automatic, welzl, cutting_plane };

namespace detail {

// Smallest ball with all of `bnd` on its boundary: center in the affine hull
// of bnd, found from the Gram system of differences to bnd[0].
struct BoundaryBall {
    Vec center;
    double r2 = -1.0;  // negative radius marks "empty", covering nothing
};

inline BoundaryBall ball_with_boundary(const std::vector<Vec>& pts, const std::vector<std::size_t>& bnd) {
    BoundaryBall b;
    if (bnd.empty()) return b;
    const Vec& q0 = pts[bnd[0]];
    const std::size_t m = bnd.size() - 1;
    if (m == 0) {
        b.center = q0;
        b.r2 = 0.0;
        return b;
    }
    Matrix gram(m, Vec(m, 0.0));
    Vec rhs(m, 0.0);
    std::vector<Vec> diffs;
    diffs.reserve(m);
    for (std::size_t k = 0; k < m; ++k) diffs.push_back(sub(pts[bnd[k + 1]], q0));
    for (std::size_t k = 0; k < m; ++k) {
        rhs[k] = 0.5 * norm2sq(diffs[k]);
        for (std::size_t l = 0; l < m; ++l) gram[k][l] = dot(diffs[k], diffs[l]);
    }
    auto alpha = solve_square(gram, rhs, 1e-13);
    if (!alpha) return b;  // affinely dependent boundary set; caller falls back
    Vec c = q0;
    for (std::size_t k = 0; k < m; ++k) axpy(c, (*alpha)[k], diffs[k]);
    b.r2 = norm2sq(sub(c, q0));
    b.center = std::move(c);
    return b;
}

inline bool covers(const BoundaryBall& b, const Vec& p) {
    if (b.r2 < 0) return false;
    return norm2sq(sub(p, b.center)) <= b.r2 * (1.0 + 1e-12) + 1e-22;
}

// Welzl move-to-front over an index list; boundary set capped at dim+1.
class WelzlSolver {
public:
    WelzlSolver(const std::vector<Vec>& pts, std::size_t dim) : pts_(pts), cap_(dim + 1) {}

    BoundaryBall solve(std::vector<std::size_t>& order) {
        std::vector<std::size_t> bnd;
        return mtf(order, order.size(), bnd);
    }

    bool failed = false;

private:
    BoundaryBall mtf(std::vector<std::size_t>& order, std::size_t limit, std::vector<std::size_t>& bnd) {
        BoundaryBall ball = ball_with_boundary(pts_, bnd);
        if (bnd.size() >= 2 && ball.r2 < 0) failed = true;
        if (bnd.size() == cap_) return ball;
        for (std::size_t i = 0; i < limit; ++i) {
            const std::size_t p = order[i];
            if (!covers(ball, pts_[p])) {
                bnd.push_back(p);
                ball = mtf(order, i, bnd);
                bnd.pop_back();
                // move-to-front keeps hard points early on re-visits
                for (std::size_t j = i; j > 0; --j) std::swap(order[j], order[j - 1]);
            }
        }
        return ball;
    }

    const std::vector<Vec>& pts_;
    std::size_t cap_;
};

inline std::vector<std::size_t> near_sphere_support(const std::vector<Vec>& pts, const Vec& center,
                                                    double radius) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (std::fabs(dist2(pts[i], center) - radius) <= eps_cert) support.push_back(i);
    return support;
}

inline bool ball_covers_all(const std::vector<Vec>& pts, const Vec& center, double radius) {
    for (const Vec& p : pts)
        if (dist2(p, center) > radius + eps_feas) return false;
    return true;
}

}  // namespace detail

inline Ball min_enclosing_ball(const std::vector<Vec>& pts, MebMethod method = MebMethod::automatic) {
    if (pts.empty()) throw InputError("min_enclosing_ball: empty point set");
    const std::size_t n = pts[0].size();
    for (const Vec& p : pts) {
        if (p.size() != n) throw InputError("min_enclosing_ball: dimension mismatch");
        require_finite(p, "min_enclosing_ball point");
    }
    Ball out;
    bool solved = false;
    if (method != MebMethod::cutting_plane) {
        std::vector<std::size_t> order(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) order[i] = i;
        // deterministic shuffle; support extraction below is order-independent
        Rng rng(0x5deece66dull);
        for (std::size_t i = pts.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
        detail::WelzlSolver solver(pts, n);
        detail::BoundaryBall b = solver.solve(order);
        if (b.r2 >= 0 && !solver.failed) {
            out.center = b.center;
            out.radius = std::sqrt(std::max(0.0, b.r2));
            solved = detail::ball_covers_all(pts, out.center, out.radius);
        }
    }
    if (!solved) {
        if (method == MebMethod::welzl)
            throw SolverFailure("min_enclosing_ball: Welzl failed on this input");
        MinimaxResult r = minimize_pnorm_max(pts, 2.0);
        out.center = r.center;
        out.radius = r.value;
        if (!detail::ball_covers_all(pts, out.center, out.radius)) {
            // cover exactly; the optimality gap stays within solver tolerance
            double rmax = 0;
            for (const Vec& p : pts) rmax = std::max(rmax, dist2(p, out.center));
            out.radius = rmax;
        }
    }
    out.support = detail::near_sphere_support(pts, out.center, out.radius);
    return out;
}

inline Ball min_enclosing_ball(const PointBody& body, MebMethod method = MebMethod::automatic) {
    return min_enclosing_ball(body.points, method);
}

}  // namespace radii
