#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "radii/body.hpp"
#include "radii/hpolytope.hpp"
#include "radii/rng.hpp"

using namespace radii;

namespace {

std::vector<Vec> sorted_points(PointBody b) {
    std::vector<Vec> p = b.points;
    std::sort(p.begin(), p.end());
    return p;
}

bool multiset_close(const PointBody& a, const PointBody& b, double tol) {
    if (a.points.size() != b.points.size()) return false;
    std::vector<Vec> pa = sorted_points(a), pb = sorted_points(b);
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!approx_equal(pa[i], pb[i], tol)) return false;
    return true;
}

}  // namespace

TEST_CASE("point body validation") {
    CHECK_THROWS_AS(PointBody(2, {}), InputError);
    CHECK_THROWS_AS(PointBody(2, {{1.0}}), InputError);
    CHECK_THROWS_AS(PointBody(2, {{1.0, std::nan("")}}), InputError);
    PointBody ok(1, {{0.5}});
    CHECK(ok.dim == 1);
}

TEST_CASE("minkowski sum basics") {
    PointBody a(1, {{0.0}});
    PointBody b(1, {{5.0}});
    PointBody s = minkowski_sum({a, b});
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0][0] == 5.0);

    PointBody e1(2, {{1, 0}, {-1, 0}});
    PointBody e2(2, {{0, 1}, {0, -1}});
    PointBody q = minkowski_sum({e1, e2});
    REQUIRE(q.points.size() == 4);
    PointBody expected(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(multiset_close(q, expected, 0.0));
}

TEST_CASE("hexagon pair sets contain the cancelling tuple") {
    auto pair_set = [](double ang) {
        return PointBody(2, {{std::cos(ang), std::sin(ang)}, {-std::cos(ang), -std::sin(ang)}});
    };
    PointBody s = minkowski_sum({pair_set(M_PI / 3), pair_set(2 * M_PI / 3), pair_set(M_PI)});
    REQUIRE(s.points.size() == 8);
    bool has_zero = false;
    for (const Vec& p : s.points)
        if (norm2(p) <= 1e-12) has_zero = true;
    CHECK(has_zero);
}

TEST_CASE("sum budget produces a budget error") {
    PointBody big(1, std::vector<Vec>(100, Vec{1.0}));
    CHECK_THROWS_AS(minkowski_sum({big, big, big}, 1000), BudgetExceeded);
}

TEST_CASE("minkowski sum commutes and associates as a multiset") {
    Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(1, 3);
        auto rand_body = [&] {
            std::vector<Vec> pts;
            for (int i = 0, k = rng.uniform_int(1, 4); i < k; ++i) {
                Vec p(n);
                for (double& x : p) x = rng.uniform(-1.0, 1.0);
                pts.push_back(std::move(p));
            }
            return PointBody(n, pts);
        };
        PointBody a = rand_body(), b = rand_body(), c = rand_body();
        CHECK(multiset_close(minkowski_sum({a, b}), minkowski_sum({b, a}), 1e-12));
        PointBody left = minkowski_sum({minkowski_sum({a, b}), c});
        PointBody right = minkowski_sum({a, minkowski_sum({b, c})});
        CHECK(multiset_close(left, right, 1e-12));
    }
}

TEST_CASE("hpolytope normalization and rejection") {
    // square [-1/2, 1/2]^2 given with b = 1/2 rows
    std::vector<Vec> a{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    Vec b{0.5, 0.5, 0.5, 0.5};
    HPolytope p(2, a, b);
    CHECK(p.normals[0][0] == doctest::Approx(2.0));
    CHECK(p.gauge({0.5, 0.0}) == doctest::Approx(1.0));
    CHECK(p.gauge({0.0, 0.0}) == 0.0);

    CHECK_THROWS_WITH_AS(HPolytope(2, a, {0.5, 0.5, 0.5, 0.0}), doctest::Contains("origin not interior"),
                         InputError);
    CHECK_THROWS_WITH_AS(HPolytope(2, a, {0.5, -0.5, 0.5, 0.5}), doctest::Contains("origin not interior"),
                         InputError);
    // halfplane only: unbounded
    CHECK_THROWS_WITH_AS(HPolytope(2, {{1, 0}}, {1.0}), doctest::Contains("unbounded"), InputError);
    // unbounded in a non-axis direction as well
    CHECK_THROWS_AS(HPolytope(2, {{1, 1}, {-1, -1}, {1, -1}}, {1.0, 1.0, 1.0}), InputError);
}

TEST_CASE("hpolytope support function") {
    std::vector<Vec> a{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    HPolytope box(2, a, Vec(4, 1.0));  // [-1,1]^2
    CHECK(box.support({1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(box.support({1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(box.support({-3.0, 0.0}) == doctest::Approx(3.0));
}
