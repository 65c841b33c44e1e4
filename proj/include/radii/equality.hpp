#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "radii/balanced.hpp"
#include "radii/linalg.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

/// Equality signature of the selection bound sqrt(sum r_i^2): every vector of
/// every set orthogonal to every vector of every other set, and the spans
/// fitting disjointly into R^n.
inline bool detect_orthogonal_equality(const std::vector<BalancedSet>& sets, double tol = eps_eq) {
    if (sets.empty()) throw InputError("detect_orthogonal_equality: empty set list");
    const int n = sets[0].dim;
    for (const BalancedSet& s : sets)
        if (s.dim != n) throw InputError("detect_orthogonal_equality: dimension mismatch");
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            for (const Vec& u : sets[a].vectors)
                for (const Vec& v : sets[b].vectors)
                    if (std::fabs(dot(u, v)) > tol * sets[a].radius * sets[b].radius) return false;
    int dim_sum = 0;
    for (const BalancedSet& s : sets) dim_sum += detail::rank_of(s.vectors);
    return dim_sum <= n;
}

namespace detail {

inline Vec rotate2(const Vec& v, double ang) {
    return {std::cos(ang) * v[0] - std::sin(ang) * v[1], std::sin(ang) * v[0] + std::cos(ang) * v[1]};
}

inline bool matches_direction(const Vec& v, const Vec& tmpl, double tol) {
    return approx_equal(v, tmpl, tol) || approx_equal(neg(v), tmpl, tol);
}

}  // namespace detail

/// Planar three-family equality signature: each set an antipodal unit pair
/// and the three directions consecutive pi/3 rotations of one another (the
/// regular-hexagon configuration), up to a common rotation.
inline bool detect_hexagon_equality(const std::vector<BalancedSet>& sets, double tol = eps_eq) {
    if (sets.size() != 3) throw InputError("detect_hexagon_equality: exactly three sets required");
    for (const BalancedSet& s : sets) {
        if (s.dim != 2) throw InputError("detect_hexagon_equality: sets must be planar");
        if (std::fabs(s.radius - 1.0) > tol) throw InputError("detect_hexagon_equality: radii must be 1");
    }
    std::array<Vec, 3> dir;
    for (std::size_t i = 0; i < 3; ++i) {
        if (sets[i].vectors.size() != 2) return false;
        if (norm2(add(sets[i].vectors[0], sets[i].vectors[1])) > tol) return false;  // not antipodal
        dir[i] = sets[i].vectors[0];
    }
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            if (std::fabs(std::fabs(dot(dir[a], dir[b])) - 0.5) > tol) return false;

    // Rotate dir[0] onto the first template direction and try both
    // assignments of the remaining sets (the labeling is free).
    const Vec t1 = {std::cos(M_PI / 3), std::sin(M_PI / 3)};
    const Vec t2 = {std::cos(2 * M_PI / 3), std::sin(2 * M_PI / 3)};
    const Vec t3 = {-1.0, 0.0};
    for (int flip = 0; flip < 2; ++flip) {
        const Vec d0 = flip ? neg(dir[0]) : dir[0];
        const double ang = std::atan2(t1[1], t1[0]) - std::atan2(d0[1], d0[0]);
        const Vec r1 = detail::rotate2(dir[1], ang);
        const Vec r2 = detail::rotate2(dir[2], ang);
        const bool direct = detail::matches_direction(r1, t2, 4 * tol) &&
                            detail::matches_direction(r2, t3, 4 * tol);
        const bool swapped = detail::matches_direction(r1, t3, 4 * tol) &&
                             detail::matches_direction(r2, t2, 4 * tol);
        if (direct || swapped) return true;
    }
    return false;
}

}  // namespace radii
