#include <catch2/catch.hpp>

#include "cubelab/generators.hpp"
#include "cubelab/iso.hpp"
#include "cubelab/multipole.hpp"

using namespace cubelab;

TEST_CASE("c4_pole shape") {
    Multipole z = c4_pole();
    CHECK(z.order() == 4);
    CHECK(z.edges().size() == 4);
    CHECK(z.semiedge_count() == 4);
    // one semiedge per vertex, at the documented positions
    CHECK(z.semiedge_vertex("f1") == 0);
    CHECK(z.semiedge_vertex("f2") == 1);
    CHECK(z.semiedge_vertex("f3") == 2);
    CHECK(z.semiedge_vertex("f4") == 3);
    // deterministic constructor
    Multipole z2 = c4_pole();
    CHECK(z.edges() == z2.edges());
    CHECK(z.semiedges().size() == z2.semiedges().size());
}

TEST_CASE("join errors") {
    Multipole z = c4_pole();
    SECTION("same label") {
        CHECK_THROWS_AS(z.join_semiedges("f1", "f1"), GraphError);
        try {
            z.join_semiedges("f1", "f1");
        } catch (const GraphError& e) {
            CHECK(e.code() == Err::UnknownSemiedge);
        }
    }
    SECTION("unknown label") {
        try {
            z.join_semiedges("f1", "nope");
            FAIL();
        } catch (const GraphError& e) {
            CHECK(e.code() == Err::UnknownSemiedge);
        }
    }
    SECTION("adjacent endvertices give MultiEdge") {
        try {
            z.join_semiedges("f1", "f2");   // z1 and z2 are already adjacent
            FAIL();
        } catch (const GraphError& e) {
            CHECK(e.code() == Err::MultiEdge);
        }
    }
    SECTION("shared endvertex gives Loop") {
        Multipole m(2, {{0, 1}}, {{0, "a"}, {0, "b"}, {1, "c"}});
        try {
            m.join_semiedges("a", "b");
            FAIL();
        } catch (const GraphError& e) {
            CHECK(e.code() == Err::Loop);
        }
    }
}

TEST_CASE("join decreases semiedges by two and adds one proper edge") {
    Multipole a = c4_pole(1);
    Multipole b = c4_pole(2);
    Multipole joined = join(a, "f2^1", b, "f1^2");
    CHECK(joined.semiedge_count() == a.semiedge_count() + b.semiedge_count() - 2);
    CHECK(joined.edges().size() == a.edges().size() + b.edges().size() + 1);
}

TEST_CASE("joining two semiedges of one multipole") {
    // a path of four vertices with semiedges on both ends and on the middle
    Multipole m(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, "left"}, {3, "right"}, {1, "mid1"}, {2, "mid2"}});
    Multipole closed = join(m, "left", m, "right");   // same object on both sides
    CHECK(closed.order() == 4);
    CHECK(closed.edges().size() == 4);
    CHECK(closed.semiedge_count() == 2);
    CHECK(closed.edge_between(0, 3));
}

TEST_CASE("two C4-poles joined at both right/left pairs form a 2-chain") {
    Chain c = chain(2);
    CHECK(c.pole.order() == 8);
    CHECK(c.pole.edges().size() == 10);
    CHECK(c.pole.semiedge_count() == 4);
    CHECK(c.e1 == "f1^1");
    CHECK(c.e2 == "f2^2");
    CHECK(c.e3 == "f3^1");
    CHECK(c.e4 == "f4^2");
}

TEST_CASE("chain basics") {
    Chain c1 = chain(1);
    CHECK(c1.pole.order() == 4);
    CHECK(c1.pole.edges().size() == 4);
    CHECK(c1.pole.semiedge_count() == 4);

    Chain c3 = chain(3);
    CHECK(c3.pole.order() == 12);
    CHECK(c3.pole.semiedge_count() == 4);

    for (int n = 1; n <= 6; ++n) CHECK(chain(n).pole.order() == 4 * n);

    CHECK_THROWS_AS(chain(0), GraphError);
}

TEST_CASE("papillon assembly from chains") {
    CubicGraph g11 = papillon_from_chains(1, 1);
    CHECK(g11.order() == 8);
    CHECK(are_isomorphic(g11, papillon(1, 1).graph).isomorphic);

    CubicGraph g22 = papillon_from_chains(2, 2);
    CHECK(canonical_form(g22).bytes == canonical_form(papillon(2, 2).graph).bytes);

    CHECK(papillon_from_chains(3, 3).order() == 24);
}

TEST_CASE("chain construction matches the direct definition across the family") {
    for (int r = 1; r <= 3; ++r)
        for (int l = r; r + l <= 6; ++l) {
            CubicGraph via_chains = papillon_from_chains(r, l);
            CHECK(are_isomorphic(via_chains, papillon(r, l).graph).isomorphic);
        }
}

TEST_CASE("multipole JSON schema") {
    nlohmann::json j = multipole_to_json(c4_pole(2));
    CHECK(j["vertices"] == 4);
    CHECK(j["edges"].size() == 4);
    CHECK(j["semiedges"].size() == 4);
    CHECK(j["semiedges"][0]["label"] == "f1^2");
    CHECK(j["semiedges"][0]["vertex"] == 0);
}

TEST_CASE("multipole rejects over-degree and duplicate labels") {
    CHECK_THROWS_AS(Multipole(1, {}, {{0, "a"}, {0, "b"}, {0, "c"}, {0, "d"}}), GraphError);
    CHECK_THROWS_AS(Multipole(2, {{0, 1}}, {{0, "x"}, {1, "x"}}), GraphError);
}
