#include <catch2/catch.hpp>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/generators.hpp"
#include "oracles.hpp"

using namespace cubelab;

namespace {

std::vector<std::pair<int, int>> k4_edges() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

} // namespace

TEST_CASE("build_graph accepts K4") {
    CubicGraph g(4, k4_edges());
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 4; ++v) {
        int deg = 0;
        for (const auto& a : g.arcs(v)) {
            CHECK(a.to != v);
            ++deg;
        }
        CHECK(deg == 3);
    }
}

TEST_CASE("build_graph rejects a 6-cycle as not cubic") {
    std::vector<std::pair<int, int>> c6;
    for (int i = 0; i < 6; ++i) c6.push_back({i, (i + 1) % 6});
    try {
        CubicGraph g(6, c6);
        FAIL("expected NotCubic");
    } catch (const GraphError& e) {
        CHECK(e.code() == Err::NotCubic);
    }
}

TEST_CASE("build_graph validates structure") {
    SECTION("odd order") {
        try {
            CubicGraph g(5, {});
            FAIL();
        } catch (const GraphError& e) {
            CHECK(e.code() == Err::OddOrder);
        }
    }
    SECTION("loop") {
        auto e = k4_edges();
        e[0] = {0, 0};
        try {
            CubicGraph g(4, e);
            FAIL();
        } catch (const GraphError& ge) {
            CHECK(ge.code() == Err::NotSimple);
        }
    }
    SECTION("parallel edge") {
        try {
            CubicGraph g(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}});
            FAIL();
        } catch (const GraphError& ge) {
            CHECK(ge.code() == Err::NotSimple);
        }
    }
    SECTION("disconnected") {
        std::vector<std::pair<int, int>> two_k4;
        for (auto [u, v] : k4_edges()) {
            two_k4.push_back({u, v});
            two_k4.push_back({u + 4, v + 4});
        }
        try {
            CubicGraph g(8, two_k4);
            FAIL();
        } catch (const GraphError& ge) {
            CHECK(ge.code() == Err::Disconnected);
        }
    }
    SECTION("vertex id out of range") {
        auto e = k4_edges();
        e[5] = {2, 7};
        try {
            CubicGraph g(4, e);
            FAIL();
        } catch (const GraphError& ge) {
            CHECK(ge.code() == Err::BadVertexId);
        }
    }
}

TEST_CASE("papillon(1,1) edge list from the definition builds an 8-vertex graph") {
    // outer 4-cycle, spokes, inner rungs plus the two cut edges
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5},
                                              {2, 6}, {3, 7}, {4, 5}, {6, 7}, {5, 7}, {4, 6}};
    CubicGraph g(8, edges);
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 12);
}

TEST_CASE("girth of reference graphs") {
    CHECK(girth(named_graph("k4")) == 3);
    CHECK(girth(papillon(1, 1).graph) == 4);
    CHECK(girth(named_graph("petersen")) == 5);
    CHECK(girth(named_graph("q3")) == 4);
}

TEST_CASE("girth witness validates and matches the edge-removal oracle") {
    std::vector<CubicGraph> corpus;
    corpus.push_back(named_graph("k4"));
    corpus.push_back(named_graph("petersen"));
    corpus.push_back(named_graph("prism6"));
    for (int r = 1; r <= 3; ++r)
        for (int l = r; r + l <= 6; ++l) corpus.push_back(papillon(r, l).graph);
    for (const CubicGraph& g : corpus) {
        auto [len, cyc] = girth_with_witness(g);
        CHECK(len == oracles::girth_by_edge_removal(g));
        CHECK(cycle_is_valid(g, cyc));
        CHECK(cyc.length() == len);
    }
}

TEST_CASE("odd girth of papillon graphs") {
    Papillon p11 = papillon(1, 1);
    OddGirthResult r = odd_girth(p11.graph);
    REQUIRE_FALSE(r.bipartite);
    CHECK(r.length == 5);
    CHECK(cycle_is_valid(p11.graph, r.witness));
    CHECK(r.witness.length() == 5);
    CHECK(r.witness.odd());
    // the documented witness (u1,u2,v2,v4,u4) is a 5-cycle of the graph
    Cycle documented{{p11.layout.u(1), p11.layout.u(2), p11.layout.v(2), p11.layout.v(4), p11.layout.u(4)}};
    CHECK(cycle_is_valid(p11.graph, documented));

    OddGirthResult r23 = odd_girth(papillon(2, 3).graph);
    REQUIRE_FALSE(r23.bipartite);
    CHECK(r23.length == 7);
}

TEST_CASE("odd girth reports bipartite graphs") {
    CHECK(odd_girth(named_graph("k33")).bipartite);
    CHECK(odd_girth(named_graph("q3")).bipartite);
    CHECK(odd_girth(named_graph("prism6")).bipartite);
}

TEST_CASE("odd girth equals the double-cover oracle on the corpus") {
    std::vector<CubicGraph> corpus;
    for (auto name : {"k4", "k33", "q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    for (int r = 1; r <= 3; ++r)
        for (int l = r; r + l <= 6; ++l) corpus.push_back(papillon(r, l).graph);
    for (const CubicGraph& g : corpus) {
        int expect = oracles::odd_girth_by_double_cover(g);
        OddGirthResult got = odd_girth(g);
        if (expect < 0) {
            CHECK(got.bipartite);
        } else {
            REQUIRE_FALSE(got.bipartite);
            CHECK(got.length == expect);
            CHECK(girth(g) <= got.witness.length());
        }
    }
}

TEST_CASE("papillon girth and odd girth across the family") {
    for (int r = 1; r <= 3; ++r)
        for (int l = r; r + l <= 6; ++l) {
            CubicGraph g = papillon(r, l).graph;
            CHECK(girth(g) == 4);
            OddGirthResult og = odd_girth(g);
            REQUIRE_FALSE(og.bipartite);
            CHECK(og.length == 2 * r + 3);
        }
}

TEST_CASE("is_bipartite") {
    CHECK(is_bipartite(named_graph("k33")).bipartite);
    CHECK(is_bipartite(named_graph("prism6")).bipartite);
    BipartiteResult r = is_bipartite(papillon(1, 1).graph);
    REQUIRE_FALSE(r.bipartite);
    REQUIRE(r.odd_cycle.has_value());
    CHECK(cycle_is_valid(papillon(1, 1).graph, *r.odd_cycle));
    CHECK(r.odd_cycle->odd());
    // 2-colouring witness is proper
    BipartiteResult b = is_bipartite(named_graph("q3"));
    const CubicGraph q3 = named_graph("q3");
    for (const auto& e : q3.edges()) CHECK(b.side[e[0]] != b.side[e[1]]);
}

TEST_CASE("odd_girth agrees with is_bipartite on bipartiteness") {
    std::vector<CubicGraph> corpus;
    for (auto name : {"k4", "k33", "q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    corpus.push_back(papillon(1, 2).graph);
    for (const CubicGraph& g : corpus) CHECK(odd_girth(g).bipartite == is_bipartite(g).bipartite);
}

TEST_CASE("cyclic edge connectivity") {
    CyclicConnectivity c11 = cyclic_edge_connectivity(papillon(1, 1).graph);
    REQUIRE(c11.defined);
    CHECK(c11.value == 4);

    CyclicConnectivity c22 = cyclic_edge_connectivity(papillon(2, 2).graph);
    REQUIRE(c22.defined);
    CHECK(c22.value == 4);

    CHECK_FALSE(cyclic_edge_connectivity(named_graph("k4")).defined);
    CHECK_FALSE(cyclic_edge_connectivity(named_graph("k33")).defined);

    CHECK(cyclic_edge_connectivity(named_graph("petersen")).value == 5);

    try {
        cyclic_edge_connectivity(papillon(4, 4).graph);   // 32 vertices > default bound
        FAIL();
    } catch (const GraphError& e) {
        CHECK(e.code() == Err::OrderTooLarge);
    }
}

TEST_CASE("cyclic connectivity witness cut is cycle separating") {
    CubicGraph g = papillon(2, 2).graph;
    CyclicConnectivity cc = cyclic_edge_connectivity(g);
    REQUIRE(cc.defined);
    REQUIRE(static_cast<int>(cc.cut.size()) == cc.value);
    // removing the cut leaves at least two components with a cycle each
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : cc.cut) removed[e] = 1;
    std::vector<int> comp(g.order(), -1);
    int cyclic = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = s;
        int verts = 0, arcs = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++verts;
            for (const auto& a : g.arcs(v)) {
                if (removed[a.edge]) continue;
                ++arcs;
                if (comp[a.to] < 0) {
                    comp[a.to] = s;
                    stack.push_back(a.to);
                }
            }
        }
        if (arcs / 2 >= verts) ++cyclic;
    }
    CHECK(cyclic >= 2);
}

TEST_CASE("three-connectivity check") {
    CHECK(is_three_connected(named_graph("k4")));
    CHECK(is_three_connected(named_graph("petersen")));
    CHECK(is_three_connected(papillon(1, 1).graph));
    // two K4-minus-edge gadgets linked by only two edges: a 2-cut
    std::vector<std::pair<int, int>> linked = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                               {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                               {0, 4}, {1, 5}};
    CubicGraph g(8, linked);
    CHECK_FALSE(is_three_connected(g));
}
