#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/workbench/generators.hpp"

#include <doctest.h>

using namespace hgc;

TEST_CASE("edges are stored sorted and indexed by vertex") {
    const Hypergraph h(4, {{2, 0, 1}, {3, 1}});
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()) == std::vector<Vertex>{0, 1, 2});
    CHECK(h.edge_size(1) == 2);
    CHECK(h.incident(1).size() == 2);
    CHECK(h.incident(3).size() == 1);
    CHECK(h.incident(3)[0] == 1);
    CHECK(h.incident(99).empty());
    CHECK(h.edge_lists() == std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 3}});
}

TEST_CASE("validate reports each kind of issue") {
    SUBCASE("clean") {
        const auto rep = validate(workbench::gen_fano());
        CHECK(rep.clean());
        CHECK(rep.ok());
    }
    SUBCASE("out of range") {
        const auto rep = validate(Hypergraph(3, {{0, 3}}));
        REQUIRE(rep.issues.size() == 1);
        CHECK(rep.issues[0].kind == ValidationIssue::Kind::index_out_of_range);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("empty edge") {
        const auto rep = validate(Hypergraph(3, {{}}));
        REQUIRE(rep.violation_count() == 1);
        CHECK(rep.issues[0].kind == ValidationIssue::Kind::empty_edge);
    }
    SUBCASE("repeated vertex") {
        const auto rep = validate(Hypergraph(3, {{1, 1, 2}}));
        REQUIRE(rep.violation_count() == 1);
        CHECK(rep.issues[0].kind == ValidationIssue::Kind::repeated_vertex);
    }
    SUBCASE("duplicate edge only warns") {
        const auto rep = validate(Hypergraph(3, {{0, 1}, {1, 0}}));
        CHECK(rep.ok());
        CHECK_FALSE(rep.clean());
        REQUIRE(rep.warning_count() == 1);
        CHECK(rep.issues[0].edge == 1);
        CHECK(rep.issues[0].other == 0);
    }
}

TEST_CASE("uniformity") {
    CHECK(uniformity(workbench::gen_fano())->n == 3);
    CHECK_FALSE(uniformity(Hypergraph(4, {{0, 1}, {1, 2, 3}})).has_value());
    CHECK_FALSE(uniformity(Hypergraph(4, {})).has_value());
    CHECK(uniformity(workbench::gen_complete_uniform(6, 4))->n == 4);
}

TEST_CASE("edge degrees") {
    const auto fano = workbench::gen_fano();
    for (EdgeId e = 0; e < fano.edge_count(); ++e) CHECK(edge_degree(fano, e) == 6);
    CHECK(max_edge_degree(fano) == 6);
    CHECK(max_edge_degree(Hypergraph(3, {})) == 0);
    CHECK(max_edge_degree(Hypergraph(5, {{0, 1}, {2, 3}})) == 0);
    // K(5,3): every other edge meets a given edge except the one on the complement, which has only 2 vertices
    CHECK(max_edge_degree(workbench::gen_complete_uniform(5, 3)) == 9);
}

TEST_CASE("edge degree against a pairwise count") {
    const auto h = workbench::gen_random_uniform(9, 3, 20, 5);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        std::size_t expected = 0;
        for (EdgeId f = 0; f < h.edge_count(); ++f) {
            if (f == e) continue;
            bool meet = false;
            for (Vertex a : h.edge(e)) {
                for (Vertex b : h.edge(f)) meet = meet || a == b;
            }
            expected += meet ? 1 : 0;
        }
        CHECK(edge_degree(h, e) == expected);
    }
}

TEST_CASE("is_proper") {
    const Hypergraph h(3, {{0, 1}, {1, 2}});
    CHECK(is_proper(h, {{1, 2, 1}, 2}).proper);
    const auto bad = is_proper(h, {{1, 1, 2}, 2});
    CHECK_FALSE(bad.proper);
    CHECK(bad.monochromatic == std::vector<EdgeId>{0});
    CHECK_THROWS_AS(is_proper(h, {{1, 0, 2}, 2}), invalid_input);
    CHECK_THROWS_AS(is_proper(h, {{1, 3, 2}, 2}), invalid_input);
    CHECK_THROWS_AS(is_proper(h, {{1, 2}, 2}), invalid_input);
    CHECK(is_proper(Hypergraph(2, {}), {{1, 1}, 2}).proper);
}

TEST_CASE("birth order breaks ties by index") {
    const BirthTimes t({0.5, 0.2, 0.5, 0.0});
    CHECK(t.order() == std::vector<Vertex>{3, 1, 0, 2});
    CHECK(t.before(0, 2));
    CHECK_FALSE(t.before(2, 0));
    CHECK_THROWS_AS(BirthTimes({0.1, 1.5}), invalid_input);
    CHECK_THROWS_AS(BirthTimes({-0.1}), invalid_input);
    CHECK_THROWS_AS(require_total(Hypergraph(3, {}), BirthTimes({0.1, 0.2})), invalid_input);
}
