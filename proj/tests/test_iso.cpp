#include <catch2/catch.hpp>

#include <numeric>
#include <random>

#include "cubelab/generators.hpp"
#include "cubelab/iso.hpp"
#include "oracles.hpp"

using namespace cubelab;

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(777);
    std::vector<CubicGraph> corpus;
    for (auto name : {"k4", "k33", "q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    corpus.push_back(papillon(1, 2).graph);
    corpus.push_back(papillon(2, 2).graph);
    for (const CubicGraph& g : corpus) {
        CanonicalLabel base = canonical_form(g);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 20; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)).bytes == base.bytes);
        }
    }
}

TEST_CASE("canonical relabelling really produces the canonical graph") {
    CubicGraph g = papillon(1, 2).graph;
    CanonicalLabel lab = canonical_form(g);
    CubicGraph h = relabel(g, lab.relabelling);
    CHECK(graph6_encode(h) == lab.bytes);
}

TEST_CASE("canonical form separates and identifies all small cubic graphs") {
    // every pair of the 8 connected cubic graphs on at most 8 vertices gets
    // distinct labels, and every relabelling of each maps to the same label
    std::vector<CubicGraph> corpus;
    corpus.push_back(named_graph("k4"));
    for (int n : {6, 8})
        for (const std::string& g6 : oracles::all_connected_cubic_g6(n)) corpus.push_back(read_graph6_line(g6));
    std::set<std::string> labels;
    std::mt19937 rng(31337);
    for (const CubicGraph& g : corpus) {
        CanonicalLabel lab = canonical_form(g);
        labels.insert(lab.bytes);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 10; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)).bytes == lab.bytes);
        }
    }
    CHECK(labels.size() == corpus.size());
}

TEST_CASE("papillon(1,1) equals the sigma=(1 2) cycle permutation graph up to isomorphism") {
    CubicGraph a = papillon(1, 1).graph;
    CubicGraph b = cycle_permutation_graph(Permutation::parse_cycles("(1 2)", 4));
    CHECK(canonical_form(a).bytes == canonical_form(b).bytes);
}

TEST_CASE("distinct papillon graphs of equal order are distinguished") {
    CHECK(canonical_form(papillon(1, 3).graph).bytes != canonical_form(papillon(2, 2).graph).bytes);
    CHECK_FALSE(are_isomorphic(papillon(1, 4).graph, papillon(2, 3).graph).isomorphic);
}

TEST_CASE("are_isomorphic finds and validates mappings") {
    IsoResult r = are_isomorphic(papillon(2, 3).graph, papillon(3, 2).graph);
    REQUIRE(r.isomorphic);
    CHECK(verify_automorphism(papillon(2, 3).graph, r.mapping));   // same graph, so the map is an automorphism

    CHECK_FALSE(are_isomorphic(named_graph("k33"), named_graph("prism6")).isomorphic);

    std::mt19937 rng(99);
    CubicGraph g = papillon(2, 2).graph;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CubicGraph h = relabel(g, perm);
    IsoResult iso = are_isomorphic(g, h);
    REQUIRE(iso.isomorphic);
    for (const auto& e : g.edges()) CHECK(h.adjacent(iso.mapping[e[0]], iso.mapping[e[1]]));
}

TEST_CASE("isomorphism agrees with canonical-form equality") {
    std::vector<CubicGraph> corpus;
    for (auto name : {"q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    for (int r = 1; r <= 2; ++r)
        for (int l = r; r + l <= 5; ++l) corpus.push_back(papillon(r, l).graph);
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = i; j < corpus.size(); ++j) {
            if (corpus[i].order() != corpus[j].order()) continue;
            bool by_canon = canonical_form(corpus[i]).bytes == canonical_form(corpus[j]).bytes;
            bool by_search = are_isomorphic(corpus[i], corpus[j]).isomorphic;
            CHECK(by_canon == by_search);
        }
}

TEST_CASE("pairwise non-isomorphism of papillon graphs up to r+l = 6") {
    std::vector<std::pair<int, int>> params;
    for (int r = 1; r <= 3; ++r)
        for (int l = r; r + l <= 6; ++l) params.push_back({r, l});
    for (size_t i = 0; i < params.size(); ++i)
        for (size_t j = i + 1; j < params.size(); ++j) {
            CubicGraph a = papillon(params[i].first, params[i].second).graph;
            CubicGraph b = papillon(params[j].first, params[j].second).graph;
            if (a.order() != b.order()) continue;
            CHECK_FALSE(are_isomorphic(a, b).isomorphic);
        }
}

TEST_CASE("verify_automorphism") {
    CubicGraph g = papillon(1, 2).graph;
    std::vector<int> identity(g.order());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(verify_automorphism(g, identity));

    // swapping two non-similar vertices breaks adjacency
    std::vector<int> swapped = identity;
    std::swap(swapped[g.order() - 1], swapped[0]);
    CHECK_FALSE(verify_automorphism(g, swapped));

    std::vector<int> not_bijective(g.order(), 0);
    CHECK_THROWS_AS(verify_automorphism(g, not_bijective), GraphError);
    CHECK_THROWS_AS(verify_automorphism(g, {0, 1}), GraphError);
}

TEST_CASE("order bound") {
    CubicGraph big = papillon(4, 5).graph;   // 36 vertices
    CHECK_THROWS_AS(canonical_form(big), GraphError);
    CHECK_THROWS_AS(are_isomorphic(big, big), GraphError);
}
