#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "radii/body.hpp"
#include "radii/errors.hpp"
#include "radii/rng.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

/// Vectors on r*S^{n-1} together with strictly positive coefficients summing
/// them to zero. One "colour" of the selection theorems.
struct BalancedSet {
    int dim = 0;
    double radius = 1.0;
    std::vector<Vec> vectors;
    Vec lambdas;

    BalancedSet() = default;
    BalancedSet(int n, double r, std::vector<Vec> vecs, Vec lams)
        : dim(n), radius(r), vectors(std::move(vecs)), lambdas(std::move(lams)) {
        if (dim < 1) throw InputError("BalancedSet: dimension must be >= 1");
        if (!(radius > 0)) throw InputError("BalancedSet: radius must be positive");
        const std::size_t k = vectors.size();
        if (k < 2 || k > static_cast<std::size_t>(dim) + 1)
            throw InputError("BalancedSet: need between 2 and dim+1 vectors");
        if (lambdas.size() != k) throw InputError("BalancedSet: lambda count mismatch");
        double lam_sum = 0;
        for (double l : lambdas) {
            if (!(l > eps_pos)) throw InputError("BalancedSet: lambdas must be strictly positive");
            lam_sum += l;
        }
        Vec s = zeros(dim);
        for (std::size_t i = 0; i < k; ++i) {
            if (static_cast<int>(vectors[i].size()) != dim)
                throw InputError("BalancedSet: vector dimension mismatch");
            require_finite(vectors[i], "BalancedSet vector");
            if (std::fabs(norm2(vectors[i]) - radius) > eps_cert * std::max(1.0, radius))
                throw InputError("BalancedSet: vector not on the sphere of the given radius");
            axpy(s, lambdas[i], vectors[i]);
        }
        if (norm2(s) > eps_cert * std::max(1.0, lam_sum * radius))
            throw InputError("BalancedSet: weighted vector sum is not zero");
    }

    PointBody as_point_body() const { return PointBody(dim, vectors); }
};

/// Seeded random balanced family: k-1 directions drawn on the sphere with
/// positive weights, closed by the forced last vector. k = 2 always yields an
/// antipodal pair.
inline BalancedSet random_balanced_set(int dim, double radius, int k, std::uint64_t seed) {
    if (dim < 1) throw InputError("random_balanced_set: dimension must be >= 1");
    if (k < 2 || k > dim + 1) throw InputError("random_balanced_set: need 2 <= k <= dim+1");
    if (!(radius > 0)) throw InputError("random_balanced_set: radius must be positive");
    Rng rng(seed);
    for (;;) {
        std::vector<Vec> vecs;
        Vec lams;
        Vec w = zeros(dim);
        for (int i = 0; i + 1 < k; ++i) {
            vecs.push_back(scaled(rng.unit_vec(dim), radius));
            lams.push_back(rng.uniform(0.2, 1.2));
            axpy(w, lams.back(), vecs.back());
        }
        const double wn = norm2(w);
        if (wn < 1e-8) continue;  // near-degenerate completion; resample
        vecs.push_back(scaled(w, -radius / wn));
        lams.push_back(wn / radius);
        return BalancedSet(dim, radius, std::move(vecs), std::move(lams));
    }
}

}  // namespace radii
