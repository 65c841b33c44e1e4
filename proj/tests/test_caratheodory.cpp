#include <doctest.h>

#include <cmath>

#include "radii/caratheodory.hpp"
#include "radii/rng.hpp"

using namespace radii;

namespace {

// oracle: verify a reported combination by direct arithmetic
void check_combination(const std::vector<Vec>& pts, const Vec& target, const ConvexCombination& cc,
                       std::size_t n) {
    REQUIRE(cc.indices.size() == cc.weights.size());
    CHECK(cc.indices.size() <= n + 1);
    double total = 0;
    Vec recon = zeros(target.size());
    for (std::size_t j = 0; j < cc.indices.size(); ++j) {
        CHECK(cc.weights[j] > eps_pos);
        total += cc.weights[j];
        axpy(recon, cc.weights[j], pts[cc.indices[j]]);
    }
    CHECK(std::fabs(total - 1.0) <= eps_feas);
    CHECK(dist2(recon, target) <= eps_feas);
}

}  // namespace

TEST_CASE("symmetric pair") {
    std::vector<Vec> pts{{1, 0}, {-1, 0}, {0, 1}};
    ConvexCombination cc = caratheodory_reduce(pts, {0.0, 0.0});
    check_combination(pts, {0.0, 0.0}, cc, 2);
    REQUIRE(cc.indices.size() == 2);
    CHECK(cc.indices[0] == 0);
    CHECK(cc.indices[1] == 1);
    CHECK(cc.weights[0] == doctest::Approx(0.5));
    CHECK(cc.weights[1] == doctest::Approx(0.5));
}

TEST_CASE("four axis vectors reduce to a valid small support") {
    std::vector<Vec> pts{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    ConvexCombination cc = caratheodory_reduce(pts, {0.0, 0.0});
    check_combination(pts, {0.0, 0.0}, cc, 2);
    // oracle: enumerate all supports of size <= 3 and confirm the returned
    // one is among the feasible ones
    bool found = false;
    for (int mask = 1; mask < 16; ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<std::size_t> subset;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        if (subset == cc.indices) found = true;
    }
    CHECK(found);
}

TEST_CASE("singleton hull rejection carries a separator") {
    std::vector<Vec> pts{{2.0, 0.0}};
    try {
        caratheodory_reduce(pts, {0.0, 0.0});
        FAIL("expected NotInHull");
    } catch (const NotInHull& e) {
        REQUIRE(e.separator.size() == 2);
        // a.target > max_i a.p_i
        const double at = 0.0;
        const double ap = 2.0 * e.separator[0];
        CHECK(at > ap);
        CHECK(e.margin > 0);
    }
}

TEST_CASE("random hull memberships round-trip") {
    Rng rng(123);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = rng.uniform_int(1, 4);
        const int k = rng.uniform_int(2, 9);
        std::vector<Vec> pts;
        for (int i = 0; i < k; ++i) {
            Vec p(n);
            for (double& x : p) x = rng.uniform(-1.0, 1.0);
            pts.push_back(std::move(p));
        }
        // target: random convex combination -> must be inside
        Vec w(k);
        double tot = 0;
        for (double& x : w) {
            x = rng.uniform(0.0, 1.0);
            tot += x;
        }
        Vec target = zeros(n);
        for (int i = 0; i < k; ++i) axpy(target, w[i] / tot, pts[i]);
        ConvexCombination cc = caratheodory_reduce(pts, target);
        check_combination(pts, target, cc, static_cast<std::size_t>(n));
    }
}

TEST_CASE("outside targets get certified separators") {
    Rng rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform_int(1, 3);
        const int k = rng.uniform_int(1, 6);
        std::vector<Vec> pts;
        for (int i = 0; i < k; ++i) {
            Vec p(n);
            for (double& x : p) x = rng.uniform(-1.0, 1.0);
            pts.push_back(std::move(p));
        }
        Vec target(n, 0.0);
        target[0] = 5.0;  // far outside the unit cube sample
        HullWitness w = in_convex_hull(pts, target);
        REQUIRE(!w.inside);
        double best = -1e300;
        for (const Vec& p : pts) best = std::max(best, dot(w.separator, p));
        CHECK(dot(w.separator, target) > best);
    }
}
