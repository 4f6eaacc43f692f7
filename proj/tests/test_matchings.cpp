#include <catch2/catch.hpp>

#include <set>

#include "cubelab/generators.hpp"
#include "cubelab/matchings.hpp"
#include "oracles.hpp"

using namespace cubelab;

namespace {

// perfect matching made of the labelled papillon edges u_{2i-1}u_{2i}, v_{2i-1}v_{2i}
PerfectMatching parallel_matching(const Papillon& p) {
    std::vector<int> ids;
    const PapillonLayout& L = p.layout;
    for (int i = 1; i <= L.poles(); ++i) {
        ids.push_back(p.graph.edge_id(L.u(2 * i - 1), L.u(2 * i)));
        ids.push_back(p.graph.edge_id(L.v(2 * i - 1), L.v(2 * i)));
    }
    return make_matching(p.graph, ids);
}

PerfectMatching spoke_matching(const Papillon& p) {
    std::vector<int> ids = p.layout.spoke_edges;
    return make_matching(p.graph, ids);
}

// smallest connected cubic graph without a perfect matching: a hub vertex
// and three K4-with-one-subdivided-edge gadgets
CubicGraph no_pm_graph() {
    std::vector<std::pair<int, int>> edges;
    int hub = 15;
    for (int b = 0; b < 3; ++b) {
        int p = 5 * b, q = 5 * b + 1, r = 5 * b + 2, s = 5 * b + 3, mid = 5 * b + 4;
        edges.insert(edges.end(), {{p, q}, {p, r}, {p, s}, {q, r}, {q, s}, {r, mid}, {s, mid}});
        edges.push_back({mid, hub});
    }
    return CubicGraph(16, edges);
}

} // namespace

TEST_CASE("enumeration order is deterministic") {
    CubicGraph k4 = named_graph("k4");
    auto pms = enumerate_perfect_matchings(k4);
    REQUIRE(pms.size() == 3);
    // lowest-id uncovered vertex with edge-id ordering: 0-1 first, then 2-3
    CHECK(pms[0].edges == std::vector<int>{0, 5});   // {01, 23}
    CHECK(pms[1].edges == std::vector<int>{1, 4});   // {02, 13}
    CHECK(pms[2].edges == std::vector<int>{2, 3});   // {03, 12}
    auto again = enumerate_perfect_matchings(k4);
    for (size_t i = 0; i < pms.size(); ++i) CHECK(pms[i].edges == again[i].edges);
}

TEST_CASE("perfect matching enumeration counts") {
    CHECK(enumerate_perfect_matchings(named_graph("k4")).size() == 3);
    CubicGraph petersen = named_graph("petersen");
    CHECK(enumerate_perfect_matchings(petersen).size() == 6);
    CHECK(oracles::perfect_matching_count_by_subsets(petersen) == 6);

    CubicGraph p11 = papillon(1, 1).graph;
    CHECK(static_cast<long long>(enumerate_perfect_matchings(p11).size()) ==
          oracles::perfect_matching_count_by_subsets(p11));
}

TEST_CASE("enumeration agrees with the subset oracle on small corpus graphs") {
    std::vector<CubicGraph> corpus;
    for (auto name : {"k4", "k33", "q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    corpus.push_back(papillon(1, 1).graph);
    corpus.push_back(papillon(1, 2).graph);
    for (const CubicGraph& g : corpus) {
        auto pms = enumerate_perfect_matchings(g);
        CHECK(static_cast<long long>(pms.size()) == oracles::perfect_matching_count_by_subsets(g));
        // matchings are pairwise distinct
        std::set<uint64_t> masks;
        for (const auto& m : pms) masks.insert(m.mask);
        CHECK(masks.size() == pms.size());
    }
}

TEST_CASE("matchings validate") {
    CubicGraph k4 = named_graph("k4");
    CHECK_THROWS_AS(make_matching(k4, {0, 1}), GraphError);
    CHECK_THROWS_AS(make_matching(k4, {0}), GraphError);
    CubicGraph g = no_pm_graph();
    CHECK(enumerate_perfect_matchings(g).empty());
    CHECK_THROWS_AS(is_e2f(g), GraphError);
    CHECK_THROWS_AS(is_pmh(g), GraphError);
    CHECK_THROWS_AS(is_two_factor_hamiltonian(g), GraphError);
}

TEST_CASE("complementary two-factor") {
    CubicGraph k4 = named_graph("k4");
    for (const auto& m : enumerate_perfect_matchings(k4)) {
        TwoFactor f = complementary_two_factor(k4, m);
        REQUIRE(f.cycles.size() == 1);
        CHECK(f.cycles[0].length() == 4);
    }

    // prism with the spoke matching: two disjoint 6-cycles
    CubicGraph prism = named_graph("prism6");
    std::vector<int> rungs;
    for (int i = 0; i < 6; ++i) rungs.push_back(prism.edge_id(i, i + 6));
    TwoFactor f = complementary_two_factor(prism, make_matching(prism, rungs));
    REQUIRE(f.cycles.size() == 2);
    CHECK(f.cycles[0].length() == 6);
    CHECK(f.cycles[1].length() == 6);

    // papillon(1,1) with the parallel matching: the complement is one 8-cycle
    Papillon p11 = papillon(1, 1);
    TwoFactor f11 = complementary_two_factor(p11.graph, parallel_matching(p11));
    REQUIRE(f11.cycles.size() == 1);
    CHECK(f11.cycles[0].length() == 8);

    // cycles partition the vertex set
    std::set<int> seen;
    for (const Cycle& c : f11.cycles)
        for (int v : c.vertices) seen.insert(v);
    CHECK(static_cast<int>(seen.size()) == p11.graph.order());
}

TEST_CASE("three-edge-colouring extension") {
    // bipartite graphs always extend
    for (auto name : {"k33", "q3", "prism6"}) {
        CubicGraph g = named_graph(name);
        for (const auto& m : enumerate_perfect_matchings(g)) {
            ColouringResult r = extend_to_three_edge_colouring(g, m);
            REQUIRE(r.ok());
            CHECK(colouring_is_proper(g, *r.colouring));
            for (int e = 0; e < g.edge_count(); ++e) CHECK((r.colouring->colour[e] == 1) == m.contains(e));
        }
    }

    // papillon graphs extend for every matching
    for (int r = 1; r <= 2; ++r)
        for (int l = r; r + l <= 5; ++l) {
            CubicGraph g = papillon(r, l).graph;
            for (const auto& m : enumerate_perfect_matchings(g)) CHECK(extend_to_three_edge_colouring(g, m).ok());
        }

    // Petersen fails with a 5-cycle witness for every matching
    CubicGraph petersen = named_graph("petersen");
    for (const auto& m : enumerate_perfect_matchings(petersen)) {
        ColouringResult r = extend_to_three_edge_colouring(petersen, m);
        REQUIRE_FALSE(r.ok());
        REQUIRE(r.odd_cycle.has_value());
        CHECK(r.odd_cycle->length() == 5);
        CHECK(cycle_is_valid(petersen, *r.odd_cycle));
    }
}

TEST_CASE("E2F checker") {
    CHECK(is_e2f(papillon(2, 3).graph).e2f);
    CHECK(is_e2f(named_graph("prism6")).e2f);
    E2FResult pet = is_e2f(named_graph("petersen"));
    CHECK_FALSE(pet.e2f);
    REQUIRE(pet.witness.has_value());
    REQUIRE(pet.odd_cycle.has_value());
    CHECK(pet.odd_cycle->odd());
}

TEST_CASE("pmh_extension") {
    // the documented negative witness on papillon(1,1)
    Papillon p11 = papillon(1, 1);
    CHECK_FALSE(pmh_extension(p11.graph, parallel_matching(p11)).has_value());

    // papillon(2,2): every matching extends
    Papillon p22 = papillon(2, 2);
    for (const auto& m : enumerate_perfect_matchings(p22.graph)) {
        auto ext = pmh_extension(p22.graph, m);
        REQUIRE(ext.has_value());
        CHECK(cycle_is_valid(p22.graph, ext->cycle));
        CHECK(ext->cycle.length() == p22.graph.order());
        // H alternates between M and N
        uint64_t h_mask = 0;
        for (int e : cycle_edge_ids(p22.graph, ext->cycle)) h_mask |= 1ull << e;
        CHECK(h_mask == (m.mask | ext->second.mask));
        CHECK((m.mask & ext->second.mask) == 0);
    }

    // Prism6 has a matching that extends to a colouring but not to a
    // Hamiltonian cycle
    CubicGraph prism = named_graph("prism6");
    bool found = false;
    for (const auto& m : enumerate_perfect_matchings(prism)) {
        if (extend_to_three_edge_colouring(prism, m).ok() && !pmh_extension(prism, m).has_value()) {
            found = true;
            break;
        }
    }
    CHECK(found);
}

TEST_CASE("PMH checker") {
    CHECK(is_pmh(papillon(2, 2).graph).pmh);
    PMHResult r11 = is_pmh(papillon(1, 1).graph);
    CHECK_FALSE(r11.pmh);
    CHECK(r11.witness.has_value());
    CHECK_FALSE(is_pmh(papillon(2, 3).graph).pmh);
}

TEST_CASE("PMH certificates validate") {
    Papillon p22 = papillon(2, 2);
    PMHResult res = is_pmh(p22.graph);
    REQUIRE(res.pmh);
    CHECK(res.certificates.size() == enumerate_perfect_matchings(p22.graph).size());
    for (const PMHCertificate& c : res.certificates) {
        CHECK(cycle_is_valid(p22.graph, c.cycle));
        CHECK(c.cycle.length() == p22.graph.order());
        uint64_t h = 0;
        for (int e : cycle_edge_ids(p22.graph, c.cycle)) h |= 1ull << e;
        CHECK(h == (c.pm.mask | c.second.mask));
        CHECK((c.pm.mask & c.second.mask) == 0);
    }
}

TEST_CASE("PH checker classifies the cubic PH graphs") {
    CHECK(is_ph(named_graph("k4")).ph);
    CHECK(is_ph(named_graph("k33")).ph);
    CHECK(is_ph(named_graph("q3")).ph);
    PHResult pet = is_ph(named_graph("petersen"));
    CHECK_FALSE(pet.ph);
    CHECK_FALSE(pet.witness_pairing.empty());
    CHECK_FALSE(is_ph(papillon(1, 1).graph).ph);
    CHECK_THROWS_AS(is_ph(papillon(2, 2).graph), GraphError);   // 16 vertices > bound
}

TEST_CASE("two-factor Hamiltonian graphs") {
    CHECK(is_two_factor_hamiltonian(named_graph("k4")));
    CHECK(is_two_factor_hamiltonian(named_graph("k33")));
    CHECK_FALSE(is_two_factor_hamiltonian(papillon(1, 1).graph));
}

TEST_CASE("property implications on the corpus") {
    std::vector<CubicGraph> corpus;
    for (auto name : {"k4", "k33", "q3", "petersen", "prism6"}) corpus.push_back(named_graph(name));
    for (int r = 1; r <= 2; ++r)
        for (int l = r; r + l <= 5; ++l) corpus.push_back(papillon(r, l).graph);
    for (const CubicGraph& g : corpus) {
        bool pmh = is_pmh(g).pmh;
        bool e2f = is_e2f(g).e2f;
        if (pmh) CHECK(e2f);
        if (is_two_factor_hamiltonian(g)) CHECK(pmh);
        if (g.order() <= 12 && is_ph(g).ph) CHECK(pmh);
    }
}

TEST_CASE("principal cut profile") {
    Papillon p22 = papillon(2, 2);
    CutProfile all_spokes = principal_cut_profile(p22, spoke_matching(p22));
    CHECK(all_spokes.k == 0);
    for (int c : all_spokes.per_pole) CHECK(c == 0);

    int seen_k0 = 0, seen_k2 = 0, seen_k4 = 0;
    for (const auto& m : enumerate_perfect_matchings(p22.graph)) {
        CutProfile prof = principal_cut_profile(p22, m);   // throws LemmaViolation on any breach
        for (int c : prof.per_pole) CHECK(c == prof.k);
        if (prof.k == 0) ++seen_k0;
        if (prof.k == 2) {
            ++seen_k2;
            bool ad = m.contains(p22.layout.a) && m.contains(p22.layout.d);
            bool bc = m.contains(p22.layout.b) && m.contains(p22.layout.c);
            CHECK((ad || bc));
        }
        if (prof.k == 4) ++seen_k4;
    }
    CHECK(seen_k0 > 0);
    CHECK(seen_k2 > 0);
    CHECK(seen_k4 == 1);   // the all-boundary matching is unique
}

TEST_CASE("chain symmetry classification") {
    Papillon p22 = papillon(2, 2);
    const CubicGraph& g = p22.graph;
    const PapillonLayout& L = p22.layout;

    PerfectMatching spokes = spoke_matching(p22);
    for (int j : {1, 3}) CHECK(chain_symmetry(p22, spokes, j) == ChainSymmetry::Symmetric);

    PerfectMatching parallel = parallel_matching(p22);
    for (int j : {1, 3}) CHECK(chain_symmetry(p22, parallel, j) == ChainSymmetry::Symmetric);

    // spokes on poles 1 and 3, top/rung pairs on poles 2 and 4: asymmetric
    std::vector<int> mixed_ids;
    for (int j : {1, 3}) {
        mixed_ids.push_back(g.edge_id(L.u(2 * j - 1), L.v(2 * j - 1)));
        mixed_ids.push_back(g.edge_id(L.u(2 * j), L.v(2 * j)));
    }
    for (int j : {2, 4}) {
        mixed_ids.push_back(g.edge_id(L.u(2 * j - 1), L.u(2 * j)));
        mixed_ids.push_back(g.edge_id(L.v(2 * j - 1), L.v(2 * j)));
    }
    PerfectMatching mixed = make_matching(g, mixed_ids);
    for (int j : {1, 3}) CHECK(chain_symmetry(p22, mixed, j) == ChainSymmetry::Asymmetric);
    CHECK(phi(ChainSymmetry::Symmetric) == 1);
    CHECK(phi(ChainSymmetry::Asymmetric) == -1);

    // preconditions
    CHECK_THROWS_AS(chain_symmetry(p22, spokes, 2), GraphError);    // straddles the cut
    CHECK_THROWS_AS(chain_symmetry(p22, spokes, 4), GraphError);    // wraps around
    PerfectMatching k4m = [&] {
        std::vector<int> ids;
        for (const auto& pb : L.pole_boundary)
            for (int e : pb) ids.push_back(e);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return make_matching(g, ids);
    }();
    CHECK_THROWS_AS(chain_symmetry(p22, k4m, 1), GraphError);       // k != 0
    CHECK_THROWS_AS(chain_symmetry(papillon(2, 3), spoke_matching(papillon(2, 3)), 1), GraphError);
}

TEST_CASE("constructive extension on papillon(2,2)") {
    Papillon p22 = papillon(2, 2);
    const CubicGraph& g = p22.graph;
    const PapillonLayout& L = p22.layout;

    SECTION("k=4: the all-boundary matching yields the documented cycle") {
        std::vector<int> ids;
        for (const auto& pb : L.pole_boundary)
            for (int e : pb) ids.push_back(e);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        PerfectMatching m = make_matching(g, ids);
        REQUIRE(principal_cut_profile(p22, m).k == 4);
        HamExtension ext = constructive_pmh_extension(p22, m);
        CHECK(ext.cycle.length() == 16);
        uint64_t h = 0;
        for (int e : cycle_edge_ids(g, ext.cycle)) h |= 1ull << e;
        // the documented pattern (u1, v1, v4, v3, v7, v8, v5, v6, v2, u2, ..., u8)
        Cycle documented{{L.u(1), L.v(1), L.v(4), L.v(3), L.v(7), L.v(8), L.v(5), L.v(6), L.v(2),
                          L.u(2), L.u(3), L.u(4), L.u(5), L.u(6), L.u(7), L.u(8)}};
        REQUIRE(cycle_is_valid(g, documented));
        uint64_t want = 0;
        for (int e : cycle_edge_ids(g, documented)) want |= 1ull << e;
        CHECK(h == want);
    }

    SECTION("k=0 all symmetric: the cycle uses a and d but not b and c") {
        HamExtension ext = constructive_pmh_extension(p22, spoke_matching(p22));
        uint64_t h = 0;
        for (int e : cycle_edge_ids(g, ext.cycle)) h |= 1ull << e;
        CHECK(((h >> L.a) & 1) == 1);
        CHECK(((h >> L.d) & 1) == 1);
        CHECK(((h >> L.b) & 1) == 0);
        CHECK(((h >> L.c) & 1) == 0);
    }

    SECTION("every matching: constructive result is valid and brute force agrees") {
        for (const auto& m : enumerate_perfect_matchings(g)) {
            HamExtension ext = constructive_pmh_extension(p22, m);
            CHECK(cycle_is_valid(g, ext.cycle));
            CHECK(ext.cycle.length() == g.order());
            uint64_t h = 0;
            for (int e : cycle_edge_ids(g, ext.cycle)) h |= 1ull << e;
            CHECK((h & m.mask) == m.mask);   // contains M
            CHECK(pmh_extension(g, m).has_value());
        }
    }

    SECTION("preconditions") {
        Papillon p11 = papillon(1, 1);
        CHECK_THROWS_AS(constructive_pmh_extension(p11, spoke_matching(p11)), GraphError);   // n odd
        Papillon p12 = papillon(1, 2);
        CHECK_THROWS_AS(constructive_pmh_extension(p12, spoke_matching(p12)), GraphError);   // unbalanced
    }
}

TEST_CASE("negative witnesses for odd balanced papillon graphs") {
    for (int n : {1, 3}) {
        Papillon p = papillon(n, n);
        CHECK_FALSE(pmh_extension(p.graph, parallel_matching(p)).has_value());
    }
}

TEST_CASE("class-one test") {
    CHECK(is_class_one(named_graph("k4")));
    CHECK(is_class_one(named_graph("k33")));
    CHECK(is_class_one(named_graph("prism6")));
    CHECK_FALSE(is_class_one(named_graph("petersen")));
    for (int r = 1; r <= 2; ++r)
        for (int l = r; r + l <= 5; ++l) CHECK(is_class_one(papillon(r, l).graph));
}
