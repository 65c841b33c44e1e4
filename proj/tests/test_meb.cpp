#include <doctest.h>

#include <cmath>

#include "radii/ball.hpp"
#include "radii/caratheodory.hpp"
#include "radii/rng.hpp"

using namespace radii;

namespace {

std::vector<Vec> cube_vertices(int n) {
    std::vector<Vec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Vec p(n);
        for (int d = 0; d < n; ++d) p[d] = (mask >> d) & 1u ? 1.0 : -1.0;
        pts.push_back(std::move(p));
    }
    return pts;
}

void check_ball_invariants(const std::vector<Vec>& pts, const Ball& b) {
    for (const Vec& p : pts) CHECK(dist2(p, b.center) <= b.radius + eps_feas);
    REQUIRE(!b.support.empty());
    std::vector<Vec> support_pts;
    for (std::size_t i : b.support) {
        CHECK(std::fabs(dist2(pts[i], b.center) - b.radius) <= eps_cert);
        support_pts.push_back(pts[i]);
    }
    // minimality witness: center in conv(support)
    CHECK(in_convex_hull(support_pts, b.center).inside);
}

}  // namespace

TEST_CASE("antipodal pair") {
    std::vector<Vec> pts{{1.0, 0.0}, {-1.0, 0.0}};
    Ball b = min_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm2(b.center) <= 1e-9);
    CHECK(b.support.size() == 2);
    check_ball_invariants(pts, b);
}

TEST_CASE("sum of the two flat crosses has radius sqrt(2)") {
    const double s = std::sqrt(2.0) - 1.0;
    std::vector<Vec> k{{1, 0}, {-1, 0}, {0, s}, {0, -s}};
    std::vector<Vec> l{{0, 1}, {0, -1}, {s, 0}, {-s, 0}};
    std::vector<Vec> sum;
    for (const Vec& a : k)
        for (const Vec& c : l) sum.push_back(add(a, c));
    Ball b = min_enclosing_ball(sum);
    CHECK(b.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(norm2(b.center) <= 1e-7);
    check_ball_invariants(sum, b);
}

TEST_CASE("cube vertices are cospherical") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        std::vector<Vec> pts = cube_vertices(n);
        Ball b = min_enclosing_ball(pts);
        CHECK(b.radius == doctest::Approx(std::sqrt(double(n))).epsilon(1e-9));
        CHECK(norm2(b.center) <= 1e-7);
        check_ball_invariants(pts, b);
    }
}

TEST_CASE("single and duplicate points") {
    std::vector<Vec> one{{2.0, 3.0}};
    Ball b = min_enclosing_ball(one);
    CHECK(b.radius == 0.0);
    CHECK(approx_equal(b.center, {2.0, 3.0}, 1e-12));

    std::vector<Vec> dup{{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
    Ball b2 = min_enclosing_ball(dup);
    CHECK(b2.radius <= 1e-12);
}

TEST_CASE("adding interior points changes nothing") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(1, 4);
        std::vector<Vec> pts;
        const int k = rng.uniform_int(2, 9);
        for (int i = 0; i < k; ++i) {
            Vec p(n);
            for (double& x : p) x = rng.uniform(-2.0, 2.0);
            pts.push_back(std::move(p));
        }
        Ball b = min_enclosing_ball(pts);
        std::vector<Vec> more = pts;
        more.push_back(b.center);  // inside by construction
        Ball b2 = min_enclosing_ball(more);
        CHECK(b2.radius == doctest::Approx(b.radius).epsilon(1e-12));
    }
}

TEST_CASE("translation and scaling behaviour") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(1, 4);
        std::vector<Vec> pts;
        for (int i = 0, k = rng.uniform_int(2, 8); i < k; ++i) {
            Vec p(n);
            for (double& x : p) x = rng.uniform(-1.0, 1.0);
            pts.push_back(std::move(p));
        }
        Ball b = min_enclosing_ball(pts);
        Vec t(n);
        for (double& x : t) x = rng.uniform(-3.0, 3.0);
        const double s = rng.uniform(0.1, 4.0);
        std::vector<Vec> moved, stretched;
        for (const Vec& p : pts) {
            moved.push_back(add(p, t));
            stretched.push_back(scaled(p, s));
        }
        Ball bm = min_enclosing_ball(moved);
        CHECK(bm.radius == doctest::Approx(b.radius).epsilon(1e-9));
        CHECK(approx_equal(bm.center, add(b.center, t), 1e-7));
        Ball bs = min_enclosing_ball(stretched);
        CHECK(bs.radius == doctest::Approx(s * b.radius).epsilon(1e-9));
    }
}

TEST_CASE("welzl agrees with the cutting-plane route") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform_int(1, 4);
        std::vector<Vec> pts;
        for (int i = 0, k = rng.uniform_int(2, 10); i < k; ++i) {
            Vec p(n);
            for (double& x : p) x = rng.uniform(-2.0, 2.0);
            pts.push_back(std::move(p));
        }
        Ball a = min_enclosing_ball(pts, MebMethod::welzl);
        Ball c = min_enclosing_ball(pts, MebMethod::cutting_plane);
        CHECK(std::fabs(a.radius - c.radius) <= 1e-7 * (1.0 + a.radius));
    }
}
