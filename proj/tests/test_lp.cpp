#include <doctest.h>

#include <cmath>

#include "radii/lp.hpp"
#include "radii/rng.hpp"

using namespace radii;

namespace {

// Independent re-check of the optimality conditions on a reported solution.
void check_kkt(const Vec& c, const std::vector<LpRow>& rows, Sense sense, const LPSolution& s) {
    REQUIRE(s.status == LpStatus::optimal);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double ax = dot(rows[i].a, s.x);
        const double viol = rows[i].rel == Relation::le   ? ax - rows[i].b
                            : rows[i].rel == Relation::ge ? rows[i].b - ax
                                                          : std::fabs(ax - rows[i].b);
        CHECK(viol <= eps_feas * (1.0 + std::fabs(rows[i].b)));  // primal feasibility
        if (rows[i].rel != Relation::eq) {
            CHECK(s.duals[i] >= -eps_feas);  // dual sign
            // complementary slackness
            CHECK(std::fabs(s.duals[i] * (ax - rows[i].b)) <= 1e-7 * (1.0 + std::fabs(s.objective)));
        }
    }
    CHECK(std::fabs(s.objective - s.dual_objective) <= eps_feas * (1.0 + std::fabs(s.objective)));
    // stationarity: s_sign*c + sum duals*rho*a = 0
    const double s_sign = sense == Sense::minimize ? 1.0 : -1.0;
    Vec grad = scaled(c, s_sign);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double rho = rows[i].rel == Relation::ge ? -1.0 : 1.0;
        axpy(grad, s.duals[i] * rho, rows[i].a);
    }
    CHECK(norm2(grad) <= 1e-6 * (1.0 + norm2(c)));
}

}  // namespace

TEST_CASE("one-constraint minimum") {
    std::vector<LpRow> rows{{{1.0}, Relation::ge, 2.0}};
    LPSolution s = solve_lp({1.0}, rows, Sense::minimize);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-9));
    check_kkt({1.0}, rows, Sense::minimize, s);
}

TEST_CASE("box maximum") {
    std::vector<LpRow> rows{{{1.0, 0.0}, Relation::le, 1.0},
                            {{0.0, 1.0}, Relation::le, 1.0},
                            {{1.0, 0.0}, Relation::ge, 0.0},
                            {{0.0, 1.0}, Relation::ge, 0.0}};
    LPSolution s = solve_lp({1.0, 1.0}, rows, Sense::maximize);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(s.x[0] == doctest::Approx(1.0));
    CHECK(s.x[1] == doctest::Approx(1.0));
    check_kkt({1.0, 1.0}, rows, Sense::maximize, s);
}

TEST_CASE("1-d circumradius as an LP") {
    // min rho s.t. +-(v - z) <= rho for v in {-1, 1}; by enumeration of the
    // two active constraints the optimum is rho = 1 at z = 0.
    std::vector<LpRow> rows;
    for (double v : {-1.0, 1.0}) {
        rows.push_back({{-1.0, -1.0}, Relation::le, -v});  // v - z <= rho
        rows.push_back({{1.0, -1.0}, Relation::le, v});    // z - v <= rho
    }
    LPSolution s = solve_lp({0.0, 1.0}, rows, Sense::minimize);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.x[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::fabs(s.x[0]) <= 1e-9);
    check_kkt({0.0, 1.0}, rows, Sense::minimize, s);
}

TEST_CASE("infeasible and unbounded are distinguished") {
    std::vector<LpRow> infeasible{{{1.0}, Relation::le, 0.0}, {{1.0}, Relation::ge, 1.0}};
    CHECK(solve_lp({1.0}, infeasible, Sense::minimize).status == LpStatus::infeasible);

    std::vector<LpRow> unbounded{{{1.0}, Relation::ge, 0.0}};
    CHECK(solve_lp({1.0}, unbounded, Sense::maximize).status == LpStatus::unbounded);
}

TEST_CASE("dimension mismatch is an input error") {
    std::vector<LpRow> rows{{{1.0, 2.0}, Relation::le, 1.0}};
    CHECK_THROWS_AS(solve_lp({1.0}, rows, Sense::minimize), InputError);
}

TEST_CASE("equality rows and free variables") {
    // min x + y s.t. x + y = 1, x - y <= 3
    std::vector<LpRow> rows{{{1.0, 1.0}, Relation::eq, 1.0}, {{1.0, -1.0}, Relation::le, 3.0}};
    LPSolution s = solve_lp({1.0, 1.0}, rows, Sense::minimize);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(1.0));
    check_kkt({1.0, 1.0}, rows, Sense::minimize, s);
}

TEST_CASE("nonnegative variable mask") {
    // min x1 + x2 s.t. x1 + 2 x2 >= 4, x >= 0 (native bounds)
    LpProblem p;
    p.c = {1.0, 1.0};
    p.rows = {{{1.0, 2.0}, Relation::ge, 4.0}};
    p.nonneg = {true, true};
    LPSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(2.0));  // x = (0, 2)
    CHECK(s.x[0] >= -1e-12);
    CHECK(s.x[1] >= -1e-12);
}

TEST_CASE("random LPs satisfy strong duality and feasibility") {
    Rng rng(20240811ull);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.uniform_int(1, 4);
        const int m = rng.uniform_int(1, 8);
        Vec c(n);
        for (double& v : c) v = rng.uniform(-2.0, 2.0);
        std::vector<LpRow> rows;
        for (int i = 0; i < m; ++i) {
            LpRow row;
            row.a.resize(n);
            for (double& v : row.a) v = rng.uniform(-2.0, 2.0);
            const int rel = rng.uniform_int(0, 2);
            row.rel = rel == 0 ? Relation::le : rel == 1 ? Relation::ge : Relation::eq;
            row.b = rng.uniform(-2.0, 2.0);
            rows.push_back(std::move(row));
        }
        // box the problem so a decent share is bounded + feasible
        for (int d = 0; d < n; ++d) {
            rows.push_back({unit_axis(n, d, 1.0), Relation::le, 10.0});
            rows.push_back({unit_axis(n, d, -1.0), Relation::le, 10.0});
        }
        const Sense sense = rng.uniform01() < 0.5 ? Sense::minimize : Sense::maximize;
        LPSolution s = solve_lp(c, rows, sense);
        if (s.status == LpStatus::optimal) {
            ++solved;
            check_kkt(c, rows, sense, s);
        }
    }
    CHECK(solved > 100);
}

TEST_CASE("degenerate LP does not cycle") {
    // classic Beale-style degeneracy; must terminate via the Bland fallback
    LpProblem p;
    p.c = {-0.75, 150.0, -0.02, 6.0};
    p.nonneg = {true, true, true, true};
    p.rows = {{{0.25, -60.0, -0.04, 9.0}, Relation::le, 0.0},
              {{0.5, -90.0, -0.02, 3.0}, Relation::le, 0.0},
              {{0.0, 0.0, 1.0, 0.0}, Relation::le, 1.0}};
    LPSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == doctest::Approx(-0.05));
}
