#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tropical/error.hpp"
#include "tropical/generators.hpp"
#include "tropical/xi.hpp"

using namespace trop;

namespace {

Configuration at(const std::string& v, std::vector<std::optional<Rational>> c) { return {{v, {std::move(c)}}}; }

}  // namespace

TEST_CASE("xi map agrees with the chain method on immersive curves") {
    for (const char* name : {"square_loop", "gamma1", "gamma2", "tree", "two_loops_resolved"}) {
        TropicalCurve c = testing::curve(name);
        ObstructionReport a = xi_map(c, {});
        ObstructionReport b = dual_obstruction_chain(combinatorial_type(c));
        CHECK(a.space == b.space);
        CHECK(a.paramDim == b.paramDim);
    }
}

TEST_CASE("higher-valent examples") {
    TropicalCurve one = testing::curve("loop_4valent");
    CHECK(xi_map(one, at("V1", {Rational(0), Rational(1), Rational(3), std::nullopt})).dimH == 0);
    TropicalCurve two = testing::curve("two_loops_4valent");
    ObstructionReport r = xi_map(two, at("V1", {Rational(0), Rational(1), Rational(3), std::nullopt}));
    CHECK(r.dimH == 1);
    CHECK(r.typeLevel);
    // the short form without an infinity entry puts the last bounded edge, E4, at infinity
    ObstructionReport s = xi_map(two, at("V1", {Rational(0), Rational(1), Rational(3)}));
    CHECK(s.space == r.space);
    // configuration keys may name any vertex of the contracted cluster
    CHECK(xi_map(two, at("V2", {Rational(0), Rational(1), Rational(3), std::nullopt})).space == r.space);
}

TEST_CASE("the edge at infinity is a choice of coordinate") {
    // moving E1 to infinity with z -> 1/(z - p1) gives the same kernel
    TropicalCurve two = testing::curve("two_loops_4valent");
    Rational p1 = 2, p2 = Rational(-1, 3), p3 = 7;
    ObstructionReport a = xi_map(two, at("V1", {p1, p2, p3, std::nullopt}));
    ObstructionReport b = xi_map(two, at("V1", {std::nullopt, 1 / (p2 - p1), 1 / (p3 - p1), Rational(0)}));
    CHECK(a.space == b.space);
    TropicalCurve one = testing::curve("loop_4valent");
    CHECK(xi_map(one, at("V1", {std::nullopt, Rational(1), Rational(4), Rational(0)})).dimH == 0);
}

TEST_CASE("configuration errors") {
    TropicalCurve two = testing::curve("two_loops_4valent");
    CHECK_THROWS_AS(xi_map(two, {}), PreconditionError);
    CHECK_THROWS_AS(xi_map(two, at("V1", {Rational(0), Rational(0), Rational(3), std::nullopt})), ValidationError);
    CHECK_THROWS_AS(xi_map(two, at("V1", {Rational(0), Rational(1)})), ValidationError);
    CHECK_THROWS_AS(xi_map(two, at("V1", {Rational(0), std::nullopt, Rational(3), std::nullopt})), ValidationError);
    Configuration extra = at("V1", {Rational(0), Rational(1), Rational(3), std::nullopt});
    extra["A"] = {{Rational(0), Rational(1)}};
    CHECK_THROWS_AS(xi_map(two, extra), ValidationError);
    CHECK_THROWS_AS(parse_configuration(nlohmann::json::parse(R"({"vertices": {"V1": {"coords": [0.5]}}})")),
                    ValidationError);
}

TEST_CASE("genus-one criterion") {
    Genus1Verdict a = genus1_loop_criterion(testing::curve("loop_4valent"));
    CHECK(a.spans);
    CHECK(a.guaranteedDimH == 0);
    Genus1Verdict b = genus1_loop_criterion(testing::curve("square_loop"));
    CHECK_FALSE(b.spans);
    CHECK(b.guaranteedDimH == 1);
    CHECK_THROWS_AS(genus1_loop_criterion(testing::curve("gamma1")), PreconditionError);
    Rng rng(4);
    for (int k = 0; k < 20; ++k) {
        CurveOptions opt;
        opt.n = 2;
        opt.genus = 1;
        opt.sprout_probability = 0;
        CHECK(genus1_loop_criterion(random_curve(rng, opt)).spans);
    }
}

TEST_CASE("spanning loop: H vanishes for many configurations") {
    TropicalCurve c = testing::curve("loop_4valent");
    Rng rng(17);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 50);
    int zero = 0, total = 0;
    for (int k = 0; k < 1000; ++k) {
        std::set<Rational> s;
        while (s.size() < 3) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            s.insert(q);
        }
        std::vector<Rational> p(s.begin(), s.end());
        std::shuffle(p.begin(), p.end(), rng);
        ++total;
        zero += xi_map(c, at("V1", {p[0], p[1], p[2], std::nullopt})).dimH == 0;
    }
    CHECK(zero == total);
}

TEST_CASE("degeneration comparison") {
    TropicalCurve two = testing::curve("two_loops_4valent");
    VertexSeries s{{LaurentSeries(), LaurentSeries({{1, 1}}), LaurentSeries({{0, 1}}), std::nullopt}};
    DegenerationReport r = degeneration_compare(two, {{"V1", s}});
    CHECK(r.d == 1);
    CHECK(r.d0 == 2);
    CHECK(r.semicontinuous);
    CHECK(r.stable);
    REQUIRE(r.vertices.size() == 1);
    CHECK(r.vertices[0].root_edge == "E4");
    CHECK(r.vertices[0].aDim == r.vertices[0].treeDim);

    TropicalCurve g1 = testing::curve("gamma1");
    DegenerationReport same = degeneration_compare(g1, {});
    CHECK(same.d == same.d0);
    CHECK(same.d == 1);

    CHECK_THROWS_AS(degeneration_compare(two, {{"V1", s}}, Rational(2)), ValidationError);
    CHECK_THROWS_AS(degeneration_compare(two, {}), PreconditionError);
    VertexSeries bad{{LaurentSeries({{0, 1}}), LaurentSeries({{0, 2}}), LaurentSeries(), std::nullopt}};
    CHECK_THROWS_AS(degeneration_compare(two, {{"V1", bad}}), PreconditionError);
}

TEST_CASE("standard full-bounded vertex: local dims agree") {
    // 4-valent vertex joined to four 3-valent vertices, all star edges bounded
    TropicalCurve c = parse_curve(nlohmann::json::parse(R"({
      "ambient_dim": 3,
      "vertices": [{"id": "o", "position": [0,0,0]}, {"id": "a", "position": [1,0,0]},
                   {"id": "b", "position": [0,1,0]}, {"id": "c", "position": [0,0,1]},
                   {"id": "d", "position": [-1,-1,-1]}],
      "edges": [{"id": "oa", "ends": ["o","a"]}, {"id": "ob", "ends": ["o","b"]},
                {"id": "oc", "ends": ["o","c"]}, {"id": "od", "ends": ["o","d"]},
                {"id": "a1", "ends": ["a",null], "direction": [1,1,0]}, {"id": "a2", "ends": ["a",null], "direction": [0,-1,0]},
                {"id": "b1", "ends": ["b",null], "direction": [0,1,1]}, {"id": "b2", "ends": ["b",null], "direction": [0,0,-1]},
                {"id": "c1", "ends": ["c",null], "direction": [1,0,1]}, {"id": "c2", "ends": ["c",null], "direction": [-1,0,0]},
                {"id": "d1", "ends": ["d",null], "direction": [-1,-1,0]}, {"id": "d2", "ends": ["d",null], "direction": [0,0,-1]}]})"));
    VertexSeries s{{LaurentSeries(), LaurentSeries({{0, 1}}), LaurentSeries({{-1, 1}}), std::nullopt}};
    DegenerationReport r = degeneration_compare(c, {{"o", s}});
    REQUIRE(r.vertices.size() == 1);
    CHECK(r.vertices[0].aDim == 4);
    CHECK(r.vertices[0].treeDim == 4);
    CHECK(r.semicontinuous);
}
