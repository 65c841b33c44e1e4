#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "radii/balanced.hpp"
#include "radii/ball.hpp"
#include "radii/body.hpp"
#include "radii/errors.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

struct SelectionResult {
    std::vector<std::size_t> indices;  // one chosen vector per set
    double achieved = 0.0;             // |sum of chosen vectors - c|_2
    double guarantee = 0.0;            // sqrt(|c|^2 + sum r_i^2)
};

namespace detail {

inline void require_common_dim(const std::vector<BalancedSet>& sets, const Vec& c) {
    if (sets.empty()) throw InputError("selection: empty set list");
    for (const BalancedSet& s : sets)
        if (s.dim != static_cast<int>(c.size())) throw InputError("selection: dimension mismatch");
}

inline double selection_guarantee(const std::vector<BalancedSet>& sets, const Vec& c) {
    double g = norm2sq(c);
    for (const BalancedSet& s : sets) g += s.radius * s.radius;
    return std::sqrt(g);
}

}  // namespace detail

/// Pick one vector per balanced set by the constructive rule: first a vector
/// with u.c <= 0, then at every later stage a vector with nonnegative inner
/// product against the running sum minus c. Each certified step adds a full
/// r_i^2 to the squared length, which yields the guarantee below.
inline SelectionResult greedy_select(const std::vector<BalancedSet>& sets, const Vec& c) {
    detail::require_common_dim(sets, c);
    SelectionResult res;
    res.guarantee = detail::selection_guarantee(sets, c);
    Vec partial = zeros(c.size());
    for (std::size_t t = 0; t < sets.size(); ++t) {
        const std::vector<Vec>& u = sets[t].vectors;
        std::size_t pick = 0;
        double best = 0.0;
        if (t == 0) {
            for (std::size_t l = 0; l < u.size(); ++l) {
                const double v = dot(u[l], c);
                if (l == 0 || v < best) {
                    best = v;
                    pick = l;
                }
            }
            if (best > eps_feas * std::max(1.0, norm2(c)))
                throw BalanceViolation("greedy_select: no vector with u.c <= 0; set not balanced");
        } else {
            const Vec ref = sub(partial, c);
            for (std::size_t l = 0; l < u.size(); ++l) {
                const double v = dot(u[l], ref);
                if (l == 0 || v > best) {
                    best = v;
                    pick = l;
                }
            }
            if (best < -eps_feas * std::max(1.0, norm2(ref)))
                throw BalanceViolation("greedy_select: no vector with nonnegative step; set not balanced");
        }
        add_in_place(partial, u[pick]);
        res.indices.push_back(pick);
    }
    res.achieved = dist2(partial, c);
    return res;
}

/// Exact maximum of |u^1 + ... + u^j - c| over all index tuples.
inline SelectionResult brute_force_max(const std::vector<BalancedSet>& sets, const Vec& c,
                                       std::uint64_t max_tuples = 2000000) {
    detail::require_common_dim(sets, c);
    std::uint64_t total = 1;
    for (const BalancedSet& s : sets) {
        total *= s.vectors.size();
        if (total > max_tuples) throw BudgetExceeded("brute_force_max: tuple count exceeds cap");
    }
    SelectionResult res;
    res.guarantee = detail::selection_guarantee(sets, c);
    std::vector<std::size_t> idx(sets.size(), 0);
    double best = -1.0;
    std::vector<std::size_t> best_idx = idx;
    for (;;) {
        Vec sum = neg(c);
        for (std::size_t t = 0; t < sets.size(); ++t) add_in_place(sum, sets[t].vectors[idx[t]]);
        const double v = norm2(sum);
        if (v > best) {  // lexicographically first maximizer wins ties
            best = v;
            best_idx = idx;
        }
        std::size_t t = sets.size();
        while (t-- > 0) {
            if (++idx[t] < sets[t].vectors.size()) break;
            idx[t] = 0;
            if (t == 0) {
                res.indices = best_idx;
                res.achieved = best;
                return res;
            }
        }
    }
}

struct MinmaxResult {
    Vec c_star;
    double value = 0.0;
};

/// min over centers c of max over tuples of |u^1 + ... + u^j - c|_2, i.e. the
/// Euclidean circumradius of the Minkowski sum of the vector clouds.
inline MinmaxResult minmax_center(const std::vector<BalancedSet>& sets,
                                  std::uint64_t max_tuples = 2000000) {
    if (sets.empty()) throw InputError("minmax_center: empty set list");
    std::vector<PointBody> bodies;
    bodies.reserve(sets.size());
    for (const BalancedSet& s : sets) bodies.push_back(s.as_point_body());
    PointBody cloud = minkowski_sum(bodies, max_tuples);
    Ball b = min_enclosing_ball(cloud);
    return {b.center, b.radius};
}

}  // namespace radii
