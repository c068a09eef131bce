#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tropical/error.hpp"

using namespace trop;
using nlohmann::json;

namespace {

// vertices: id -> position; edges: [id, a, b|null, direction|null, weight]
TropicalCurve make(int n, const json& vertices, const json& edges) {
    json doc{{"ambient_dim", n}, {"vertices", json::array()}, {"edges", json::array()}};
    for (const auto& [id, p] : vertices.items()) doc["vertices"].push_back({{"id", id}, {"position", p}});
    for (const auto& e : edges) {
        json j{{"id", e[0]}, {"ends", {e[1], e[2]}}};
        if (!e[3].is_null()) j["direction"] = e[3];
        if (e.size() > 4) j["weight"] = e[4];
        doc["edges"].push_back(j);
    }
    return parse_curve(doc);
}

TropicalCurve standard_4valent_tree() {
    return make(3, {{"v", {0, 0, 0}}},
                json::array({{"a", "v", nullptr, {1, 0, 0}},
                             {"b", "v", nullptr, {0, 1, 0}},
                             {"c", "v", nullptr, {0, 0, 1}},
                             {"d", "v", nullptr, {-1, -1, -1}}}));
}

}  // namespace

TEST_CASE("square loop parses") {
    TropicalCurve c = testing::curve("square_loop");
    CHECK(genus(c.graph()) == 1);
    DegreeMap d = degree(c);
    CHECK(d.e == 4);
    CHECK(d.multiplicity.size() == 4);
    for (const auto& [w, m] : d.multiplicity) CHECK(m == 1);
    CHECK(expected_dim(c) == 4);
    CHECK(is_immersive(c));
    CHECK(is_embedded(c));
}

TEST_CASE("balancing failure names the vertex") {
    try {
        testing::curve("broken");
        FAIL("expected a balancing error");
    } catch (const ValidationError& ex) {
        CHECK(std::string(ex.what()).find("p00") != std::string::npos);
    }
}

TEST_CASE("non-primitive direction is rejected") {
    try {
        make(3, {{"v", {0, 0, 0}}},
             json::array({{"a", "v", nullptr, {2, 2, 0}}, {"b", "v", nullptr, {-1, -1, 0}}}));
        FAIL("expected an error");
    } catch (const ValidationError& ex) {
        CHECK(std::string(ex.what()).find("non-primitive direction") != std::string::npos);
    }
}

TEST_CASE("balanced vertices") {
    // standard (r+2)-valent vertex with r = 2
    CHECK(check_balancing(standard_4valent_tree()).empty());
    // weights (l, m, 1): (l a, l b) + (m c, m d) + third edge
    TropicalCurve w = make(2, {{"v", {0, 0}}},
                           json::array({{"a", "v", nullptr, {1, 0}, 2},
                                        {"b", "v", nullptr, {0, 1}, 3},
                                        {"c", "v", nullptr, {-2, -3}, 1}}));
    CHECK(check_balancing(w).empty());
    TropicalCurve plain = make(2, {{"v", {0, 0}}},
                               json::array({{"a", "v", nullptr, {1, 0}}, {"b", "v", nullptr, {0, 1}},
                                            {"c", "v", nullptr, {-1, -1}}}));
    CHECK(check_balancing(plain).empty());
}

TEST_CASE("degree of Gamma_1 and of weighted edges") {
    DegreeMap d = degree(testing::curve("gamma1"));
    CHECK(d.e == 6);
    CHECK(d.multiplicity.count({-1, -1, -1}) == 1);
    CHECK(d.multiplicity.count({1, 0, 1}) == 1);
    DegreeMap l = degree(testing::curve("loop_4valent"));
    CHECK(l.multiplicity.count({0, 0, -2}) == 1);
}

TEST_CASE("expected dimension") {
    CHECK(expected_dim(testing::curve("gamma2")) == 8);
    CHECK(expected_dim(testing::curve("tree")) == 4);
}

TEST_CASE("image graph") {
    TropicalCurve g1 = testing::curve("gamma1");
    ImageGraph same = contract_image(g1);
    CHECK(same.curve.graph().num_vertices() == g1.graph().num_vertices());
    CHECK(same.curve.graph().num_edges() == g1.graph().num_edges());

    TropicalCurve c = testing::curve("loop_4valent");
    CHECK_FALSE(is_immersive(c));
    ImageGraph img = contract_image(c);
    std::size_t v = img.curve.graph().vertex_index("V1");
    CHECK(img.curve.graph().valence(v) == 4);
    CHECK(img.vertices[v].sources.size() == 2);
}

TEST_CASE("contracted loop") {
    TropicalCurve c = make(2, {{"a", {0, 0}}, {"b", {0, 0}}},
                           json::array({{"c1", "a", "b", {0, 0}},
                                        {"c2", "a", "b", {0, 0}},
                                        {"u1", "a", nullptr, {1, 0}},
                                        {"u2", "b", nullptr, {0, 1}},
                                        {"u3", "b", nullptr, {-1, -1}}}));
    CHECK_THROWS_AS(contract_image(c), PreconditionError);
    AssumptionReport a = check_assumption_a(c);
    CHECK_FALSE(a.no_contracted_loop);
    CHECK(a.deformable == Deformability::Refuted);
}

TEST_CASE("forced directions of contracted edges") {
    TropicalCurve c = testing::curve("two_loops_4valent");
    std::size_t e = c.graph().edge_index("C");
    CHECK(forced_contracted_vector(c, e) == Vec{-1, -1, 0});
    CombinatorialType t = combinatorial_type(c);
    CHECK(t.direction[e] == IntVec{-1, -1, 0});
    AssumptionReport a = check_assumption_a(c);
    CHECK(a.deformable == Deformability::Guaranteed);
    REQUIRE(a.witness);
    CHECK(is_immersive(*a.witness));
}

TEST_CASE("resolution of a tree star is feasible") {
    Resolution r = resolve_to_trivalent(standard_4valent_tree(), {});
    CHECK(r.feasible);
    REQUIRE(r.realization);
    CHECK(r.realization->graph().is_trivalent());
    CHECK(check_balancing(*r.realization).empty());
    CHECK(r.type.graph.num_vertices() == 2);
}

TEST_CASE("caterpillar shape") {
    BinaryTree t = BinaryTree::caterpillar({1, 2, 3, 4});
    CHECK(t.internal_count() == 3);
    auto cl = t.clusters();
    CHECK(std::set<std::vector<int>>(cl.begin(), cl.end()) ==
          std::set<std::vector<int>>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
}

TEST_CASE("serialize then parse is the identity") {
    for (const char* name : {"square_loop", "gamma1", "gamma2", "loop_4valent", "two_loops_4valent", "tree"}) {
        TropicalCurve c = testing::curve(name);
        json once = serialize_curve(c);
        CHECK(serialize_curve(parse_curve(once)) == once);
    }
}

TEST_CASE("embedding detects crossings") {
    // two unbounded rays from distinct vertices that cross
    TropicalCurve c = make(2, {{"a", {0, 0}}, {"b", {2, 0}}},
                           json::array({{"ab", "a", "b", nullptr},
                                        {"a1", "a", nullptr, {1, 1}},
                                        {"a2", "a", nullptr, {-2, -1}},
                                        {"b1", "b", nullptr, {-1, 1}},
                                        {"b2", "b", nullptr, {2, -1}}}));
    CHECK(is_immersive(c));
    CHECK_FALSE(is_embedded(c));
}
