#include <doctest.h>

#include <cmath>

#include "radii/io.hpp"

using namespace radii;

TEST_CASE("body files parse and round-trip") {
    const jsonv j = jsonv::parse(R"({"dim": 2, "points": [[1, 0], [-1, 0], [0, 0.5]]})");
    PointBody b = parse_body(j);
    CHECK(b.dim == 2);
    REQUIRE(b.points.size() == 3);
    const jsonv out = body_to_json(b);
    PointBody again = parse_body(jsonv::parse(dump12(out)));
    CHECK(again.points == b.points);
}

TEST_CASE("body rejection diagnostics") {
    CHECK_THROWS_WITH_AS(parse_body(jsonv::parse(R"({"dim": 2})")), doctest::Contains("points"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_body(jsonv::parse(R"({"dim":2,"points":[[1,2],[3,"x"]]})")),
                         doctest::Contains("points[1][1]"), InputError);
    // overflowing literals die in the JSON parser itself
    CHECK_THROWS_AS(parse_body(jsonv::parse(R"({"dim":1,"points":[[1e999]]})")),
                    nlohmann::json::exception);
    // non-finite values smuggled in programmatically are named by path
    jsonv j;
    j["dim"] = 1;
    j["points"] = jsonv::array({jsonv::array({std::numeric_limits<double>::quiet_NaN()})});
    CHECK_THROWS_WITH_AS(parse_body(j), doctest::Contains("points[0][0]"), InputError);
}

TEST_CASE("gauge files parse all three variants") {
    CHECK(std::holds_alternative<EuclideanBall>(parse_gauge(jsonv::parse(R"({"type":"euclidean"})"))));
    Gauge lp = parse_gauge(jsonv::parse(R"({"type":"lp","p":3})"));
    CHECK(std::get<LpBall>(lp).p == 3.0);
    Gauge linf = parse_gauge(jsonv::parse(R"({"type":"lp","p":"inf"})"));
    CHECK(std::isinf(std::get<LpBall>(linf).p));
    Gauge poly = parse_gauge(
        jsonv::parse(R"({"type":"hpoly","A":[[1,0],[-1,0],[0,1],[0,-1]],"b":[1,1,1,1]})"));
    CHECK(std::get<HPolytope>(poly).dim == 2);

    CHECK_THROWS_WITH_AS(
        parse_gauge(jsonv::parse(R"({"type":"hpoly","A":[[1,0],[-1,0],[0,1],[0,-1]],"b":[1,1,1,0]})")),
        doctest::Contains("origin not interior"), InputError);
    CHECK_THROWS_AS(parse_gauge(jsonv::parse(R"({"type":"lp","p":0.5})")), InputError);
    CHECK_THROWS_AS(parse_gauge(jsonv::parse(R"({"type":"banana"})")), InputError);

    // gauge json round-trips including the "inf" encoding
    const jsonv round = gauge_to_json(linf);
    CHECK(std::isinf(std::get<LpBall>(parse_gauge(round)).p));
}

TEST_CASE("sets files with explicit lambdas") {
    const jsonv j = jsonv::parse(R"({
        "dim": 2, "c": [0, 0],
        "sets": [{"radius": 1, "vectors": [[1,0],[-1,0]], "lambdas": [0.5, 0.5]}]})");
    SetsInput in = parse_sets(j);
    REQUIRE(in.sets.size() == 1);
    CHECK(in.sets[0].vectors.size() == 2);
    SetsInput again = parse_sets(jsonv::parse(dump12(sets_to_json(in))));
    CHECK(again.sets[0].lambdas == in.sets[0].lambdas);
}

TEST_CASE("missing lambdas are solved for by LP") {
    const jsonv j = jsonv::parse(R"({
        "dim": 2,
        "sets": [{"radius": 1, "vectors": [[1,0],[-0.5,0.8660254037844386],[-0.5,-0.8660254037844386]]}]})");
    SetsInput in = parse_sets(j);
    REQUIRE(in.sets.size() == 1);
    const BalancedSet& s = in.sets[0];
    REQUIRE(s.lambdas.size() == 3);
    Vec sum = zeros(2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(s.lambdas[i] > eps_pos);
        axpy(sum, s.lambdas[i], s.vectors[i]);
    }
    CHECK(norm2(sum) <= 1e-9);
    CHECK(in.c == zeros(2));  // defaulted
}

TEST_CASE("one-sided vector sets are rejected with a separator") {
    const jsonv j = jsonv::parse(R"({
        "dim": 2,
        "sets": [{"radius": 1, "vectors": [[1,0],[0,1]]}]})");
    try {
        parse_sets(j);
        FAIL("expected NotInHull");
    } catch (const NotInHull& e) {
        CHECK(e.margin > 0);
        REQUIRE(e.separator.size() == 2);
        CHECK(dot(e.separator, {1.0, 0.0}) < 0);
        CHECK(dot(e.separator, {0.0, 1.0}) < 0);
    }
}

TEST_CASE("12 significant digit output") {
    jsonv j;
    j["v"] = 1.4422495703074083;
    j["two"] = 2.0;
    j["id"] = std::int64_t(7);
    j["seed"] = std::uint64_t(18446744073709551615ull);  // full 64-bit survives
    j["flag"] = true;
    j["name"] = "hex\"quote";
    j["arr"] = jsonv::array({1.0, 2.5});
    const std::string s = dump12(j);
    CHECK(s ==
          "{\"v\":1.44224957031,\"two\":2,\"id\":7,\"seed\":18446744073709551615,"
          "\"flag\":true,\"name\":\"hex\\\"quote\",\"arr\":[1,2.5]}");
    CHECK(dump12(jsonv::parse(s)) == s);  // emit-parse-emit is idempotent
    // identical values always serialize to identical bytes
    jsonv k;
    k["v"] = 1.4422495703074083;
    CHECK(dump12(k) == "{\"v\":1.44224957031}");

    jsonv bad;
    bad["x"] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(dump12(bad), InputError);
}
