#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "radii/balanced.hpp"
#include "radii/checks.hpp"
#include "radii/circumradius.hpp"
#include "radii/report.hpp"
#include "radii/selection.hpp"

namespace radii {

namespace detail {

/// n+1 unit vectors in R^n with pairwise inner product -1/n: simplex vertex
/// directions, built in the hyperplane 1-perp of R^{n+1} and re-expressed in
/// coordinates.
inline std::vector<Vec> regular_simplex_directions(int n) {
    std::vector<Vec> raw;
    for (int i = 0; i < n + 1; ++i) {
        Vec v(n + 1, -1.0 / (n + 1));
        v[i] += 1.0;
        raw.push_back(scaled(v, 1.0 / norm2(v)));
    }
    // orthonormal basis of the hyperplane orthogonal to (1,...,1)
    std::vector<Vec> basis;
    for (int k = 0; k < n; ++k) {
        Vec w(n + 1, 0.0);
        w[k] = 1.0;
        Vec ones(n + 1, 1.0 / std::sqrt(n + 1.0));
        axpy(w, -dot(w, ones), ones);
        for (const Vec& b : basis) axpy(w, -dot(w, b), b);
        basis.push_back(scaled(w, 1.0 / norm2(w)));
    }
    std::vector<Vec> out;
    for (const Vec& v : raw) {
        Vec c(n);
        for (int k = 0; k < n; ++k) c[k] = dot(v, basis[k]);
        out.push_back(scaled(c, 1.0 / norm2(c)));
    }
    return out;
}

inline BalancedSet antipodal_pair(const Vec& u) {
    return BalancedSet(static_cast<int>(u.size()), 1.0, {u, neg(u)}, {0.5, 0.5});
}

inline jsonv sets_artifact(const std::vector<BalancedSet>& sets) {
    jsonv arr = jsonv::array();
    for (const BalancedSet& s : sets) {
        jsonv js;
        js["radius"] = s.radius;
        js["vectors"] = s.vectors;
        js["lambdas"] = s.lambdas;
        arr.push_back(std::move(js));
    }
    return arr;
}

}  // namespace detail

/// Superadditivity of gauge circumradii under l_p gauges, p in [2, inf]:
/// slack = R(sum K_i, B_p) - |(R(K_1,B_p),...,R(K_j,B_p))|_p per trial.
/// Candidate violations are re-verified before being reported: tolerances
/// tightened 100x and, for p = 2, the radii recomputed with the independent
/// cutting-plane solver.
inline ConjectureReport explore_lp_conjecture(int n, double p, int trials, std::uint64_t seed) {
    if (n < 1) throw InputError("explore_lp_conjecture: dimension must be >= 1");
    if (!(p >= 2.0)) throw InputError("explore_lp_conjecture: conjecture covers p in [2, inf]");
    ConjectureReport rep;
    rep.conjecture_tag = "lp_superadditivity";
    rep.params["n"] = n;
    if (std::isinf(p))
        rep.params["p"] = "inf";
    else
        rep.params["p"] = p;
    rep.params["trials"] = trials;
    rep.params["seed"] = seed;
    rep.trials = trials;
    rep.notes = "exploratory report; p=2 and p=inf cases are theorem-backed";
    const Gauge gauge = p == 2.0 ? Gauge(EuclideanBall{}) : Gauge(LpBall(p));

    auto radius_of = [&](const PointBody& b) { return circumradius(b, gauge).radius; };
    auto slack_of = [&](const std::vector<PointBody>& bodies, double* lhs_out = nullptr,
                        double* rhs_out = nullptr) {
        Vec radii_list;
        for (const PointBody& b : bodies) radii_list.push_back(radius_of(b));
        const double lhs = lp_norm(radii_list, p);
        const double rhs = radius_of(minkowski_sum(bodies));
        if (lhs_out) *lhs_out = lhs;
        if (rhs_out) *rhs_out = rhs;
        return rhs - lhs;
    };

    // The conjecture's own tightness family: coordinate segments sum to the cube.
    {
        std::vector<PointBody> segs;
        for (int d = 0; d < n; ++d)
            segs.push_back(PointBody(n, {unit_axis(n, d, -1.0), unit_axis(n, d, 1.0)}));
        double lhs = 0, rhs = 0;
        const double s = slack_of(segs, &lhs, &rhs);
        jsonv cand;
        cand["name"] = "coordinate_segments";
        cand["lhs"] = lhs;
        cand["rhs"] = rhs;
        cand["slack"] = s;
        rep.candidate_evaluations.push_back(std::move(cand));
    }

    double min_slack = std::numeric_limits<double>::infinity();
    jsonv best_instances = jsonv::array();
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const int j = rng.uniform_int(2, 3);
        std::vector<PointBody> bodies;
        for (int i = 0; i < j; ++i) bodies.push_back(random_body(rng, n));
        double lhs = 0, rhs = 0;
        const double s = slack_of(bodies, &lhs, &rhs);
        if (s < min_slack) {
            min_slack = s;
            rep.argmin_instance = t;
            jsonv inst;
            inst["instance_id"] = t;
            inst["bodies"] = detail::bodies_artifact(bodies);
            inst["lhs"] = lhs;
            inst["rhs"] = rhs;
            inst["slack"] = s;
            best_instances.push_back(std::move(inst));
            if (best_instances.size() > 3) best_instances.erase(best_instances.begin());
        }
        if (s < -eps_eq) {
            // re-verify at tightened tolerance before crying wolf
            double vlhs = 0, vrhs = 0;
            Vec radii_list;
            for (const PointBody& b : bodies) {
                double ri = radius_of(b);
                if (p == 2.0) ri = min_enclosing_ball(b, MebMethod::cutting_plane).radius;
                radii_list.push_back(ri);
            }
            vlhs = lp_norm(radii_list, p);
            vrhs = p == 2.0 ? min_enclosing_ball(minkowski_sum(bodies), MebMethod::cutting_plane).radius
                            : radius_of(minkowski_sum(bodies));
            if (vrhs - vlhs < -eps_eq / 100) {
                jsonv viol;
                viol["instance_id"] = t;
                viol["bodies"] = detail::bodies_artifact(bodies);
                viol["lhs"] = vlhs;
                viol["rhs"] = vrhs;
                viol["slack"] = vrhs - vlhs;
                rep.violations.push_back(std::move(viol));
            }
        }
    }
    rep.min_observed_slack = trials > 0 ? min_slack : 0.0;
    rep.extremal_candidates = std::move(best_instances);
    return rep;
}

/// n+1 balanced families on S^{n-1}: explores min over centers of the maximal
/// selection norm against the conjectured bound sqrt(n+2), and evaluates the
/// conjectured equality configurations (simplex directions for even n; for
/// odd n every admissible simplex-plus-orthonormal mix).
inline ConjectureReport explore_n_plus_one(int n, int trials, std::uint64_t seed) {
    if (n < 2) throw InputError("explore_n_plus_one: dimension must be >= 2");
    ConjectureReport rep;
    rep.conjecture_tag = "n_plus_one_sets";
    rep.params["n"] = n;
    rep.params["trials"] = trials;
    rep.params["seed"] = seed;
    rep.trials = trials;
    rep.notes =
        "exploratory report; the bound sqrt(n+2) is conjectural, and any implication "
        "for sums of n+1 unit-circumradius bodies is noted only, not checked";
    const double bound = std::sqrt(n + 2.0);

    auto evaluate_candidate = [&](const std::string& name, const std::vector<BalancedSet>& sets) {
        MinmaxResult mm = minmax_center(sets);
        jsonv cand;
        cand["name"] = name;
        cand["minmax_value"] = mm.value;
        cand["c_star"] = mm.c_star;
        cand["conjectured_bound"] = bound;
        cand["slack"] = mm.value - bound;
        cand["sets"] = detail::sets_artifact(sets);
        rep.candidate_evaluations.push_back(std::move(cand));
    };

    if (n % 2 == 0) {
        std::vector<BalancedSet> sets;
        for (const Vec& u : detail::regular_simplex_directions(n)) sets.push_back(detail::antipodal_pair(u));
        evaluate_candidate("regular_simplex", sets);
    } else {
        // all admissible k: 2k+1 simplex directions in a 2k-subspace plus
        // n-2k orthonormal completions
        for (int k = 1; 2 * k + 1 <= n; ++k) {
            std::vector<BalancedSet> sets;
            for (const Vec& u : detail::regular_simplex_directions(2 * k)) {
                Vec lifted(n, 0.0);
                for (int d = 0; d < 2 * k; ++d) lifted[d] = u[d];
                sets.push_back(detail::antipodal_pair(lifted));
            }
            for (int d = 2 * k; d < n; ++d) sets.push_back(detail::antipodal_pair(unit_axis(n, d)));
            evaluate_candidate("simplex_2k_plus_orthonormal_k" + std::to_string(k), sets);
        }
    }

    double min_slack = std::numeric_limits<double>::infinity();
    jsonv best_instances = jsonv::array();
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<BalancedSet> sets;
        for (int i = 0; i < n + 1; ++i) {
            const int k = rng.uniform_int(2, n + 1);
            sets.push_back(random_balanced_set(n, 1.0, k, derive_seed(seed, (t + 1) * 1000003ull + i)));
        }
        MinmaxResult mm = minmax_center(sets);
        const double s = mm.value - bound;
        if (s < min_slack) {
            min_slack = s;
            rep.argmin_instance = t;
            jsonv inst;
            inst["instance_id"] = t;
            inst["sets"] = detail::sets_artifact(sets);
            inst["minmax_value"] = mm.value;
            inst["slack"] = s;
            best_instances.push_back(std::move(inst));
            if (best_instances.size() > 3) best_instances.erase(best_instances.begin());
        }
        if (s < -eps_eq) {
            // second, independent enclosing-ball route before reporting
            PointBody cloud = minkowski_sum([&] {
                std::vector<PointBody> bs;
                for (const BalancedSet& bset : sets) bs.push_back(bset.as_point_body());
                return bs;
            }());
            const double v2 = min_enclosing_ball(cloud, MebMethod::cutting_plane).radius;
            if (v2 - bound < -eps_eq / 100) {
                jsonv viol;
                viol["instance_id"] = t;
                viol["sets"] = detail::sets_artifact(sets);
                viol["minmax_value"] = v2;
                viol["slack"] = v2 - bound;
                rep.violations.push_back(std::move(viol));
            }
        }
    }
    rep.min_observed_slack = trials > 0 ? min_slack : 0.0;
    rep.extremal_candidates = std::move(best_instances);
    return rep;
}

}  // namespace radii
