#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "radii/errors.hpp"
#include "radii/vec.hpp"

namespace radii {

inline constexpr std::size_t default_max_sum_points = 1000000;

/// V-representation of a convex body: the hull of a finite point set.
/// Duplicate and interior points are permitted; every operation downstream
/// depends only on maxima over the points, hence only on the hull.
struct PointBody {
    int dim = 0;
    std::vector<Vec> points;

    PointBody() = default;
    PointBody(int n, std::vector<Vec> pts) : dim(n), points(std::move(pts)) {
        if (dim < 1) throw InputError("PointBody: dimension must be >= 1");
        if (points.empty()) throw InputError("PointBody: at least one point required");
        for (const Vec& p : points) {
            if (static_cast<int>(p.size()) != dim) throw InputError("PointBody: point dimension mismatch");
            require_finite(p, "PointBody point");
        }
    }

    static PointBody from_points(std::vector<Vec> pts) {
        if (pts.empty()) throw InputError("PointBody: at least one point required");
        const int n = static_cast<int>(pts[0].size());
        return PointBody(n, std::move(pts));
    }
};

inline PointBody translated(const PointBody& body, const Vec& t) {
    std::vector<Vec> pts;
    pts.reserve(body.points.size());
    for (const Vec& p : body.points) pts.push_back(add(p, t));
    return PointBody(body.dim, std::move(pts));
}

inline PointBody scaled_body(const PointBody& body, double s) {
    std::vector<Vec> pts;
    pts.reserve(body.points.size());
    for (const Vec& p : body.points) pts.push_back(scaled(p, s));
    return PointBody(body.dim, std::move(pts));
}

/// Vector (Minkowski) sum as the full product point cloud, no hull pruning.
inline PointBody minkowski_sum(const std::vector<PointBody>& bodies,
                               std::size_t max_points = default_max_sum_points) {
    if (bodies.empty()) throw InputError("minkowski_sum: empty body list");
    const int n = bodies[0].dim;
    std::uint64_t total = 1;
    for (const PointBody& b : bodies) {
        if (b.dim != n) throw InputError("minkowski_sum: dimension mismatch");
        total *= static_cast<std::uint64_t>(b.points.size());
        if (total > max_points)
            throw BudgetExceeded("minkowski_sum: product point count exceeds cap");
    }
    std::vector<Vec> sums{Vec(n, 0.0)};
    for (const PointBody& b : bodies) {
        std::vector<Vec> next;
        next.reserve(sums.size() * b.points.size());
        for (const Vec& s : sums)
            for (const Vec& p : b.points) next.push_back(add(s, p));
        sums = std::move(next);
    }
    return PointBody(n, std::move(sums));
}

/// Support value max_v dir.v over the body's points (attained index returned
/// through `argmax` when provided; ties resolved to the lowest index).
inline double support_value(const PointBody& body, const Vec& dir, std::size_t* argmax = nullptr) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < body.points.size(); ++i) {
        const double v = dot(dir, body.points[i]);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (argmax) *argmax = best_i;
    return best;
}

}  // namespace radii
