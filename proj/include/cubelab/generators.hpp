#pragma once

#include <array>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"
#include "cubelab/permutation.hpp"

namespace cubelab {

// Index bookkeeping for a papillon graph on 4r+4l vertices. The vertex rows
// keep the generator's labels: u_i has id i-1, v_i has id (2r+2l)+i-1. The
// principal cut {a,b,c,d} and the per-pole boundary semiedges are stored as
// edge ids of the host graph.
struct PapillonLayout {
    int r = 0, l = 0;   // canonicalised so r <= l
    int t = 0;          // 2r+2l, the length of the outer and inner cycles
    int a = -1, b = -1, c = -1, d = -1;
    std::vector<std::array<int, 4>> pole_vertices;   // pole j (1-based) at index j-1: u_{2j-1}, u_{2j}, v_{2j}, v_{2j-1}
    std::vector<std::array<int, 4>> pole_boundary;   // edge ids of semiedges e1..e4 of pole j
    std::vector<int> outer_edges, spoke_edges, inner_edges;

    bool balanced() const { return r == l; }
    int poles() const { return r + l; }
    int u(int i) const { return i - 1; }         // 1-based label -> vertex id
    int v(int i) const { return t + i - 1; }
    std::array<int, 4> principal_cut() const { return {a, b, c, d}; }

    std::string vertex_label(int id) const {
        return id < t ? "u" + std::to_string(id + 1) : "v" + std::to_string(id - t + 1);
    }

    std::string edge_label(const CubicGraph& g, int e) const {
        auto [x, y] = g.edge(e);
        return vertex_label(x) + vertex_label(y);
    }
};

struct Papillon {
    CubicGraph graph;
    PapillonLayout layout;
};

namespace detail {

inline void validate_papillon(const Papillon& p) {
    const CubicGraph& g = p.graph;
    const PapillonLayout& L = p.layout;
    // the inner edges must form a single cycle of length t
    {
        std::vector<std::vector<int>> nb(g.order());
        for (int e : L.inner_edges) {
            auto [x, y] = g.edge(e);
            nb[x].push_back(y);
            nb[y].push_back(x);
        }
        int start = L.v(1), prev = -1, cur = start, steps = 0;
        do {
            if (nb[cur].size() != 2) throw GraphError(Err::InternalCheckFailed, "inner cycle not 2-regular");
            int nxt = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
            prev = cur;
            cur = nxt;
            ++steps;
        } while (cur != start && steps <= L.t);
        if (steps != L.t) throw GraphError(Err::InternalCheckFailed, "inner edges do not form a single cycle");
    }
    // the principal cut separates the right r-chain from the left l-chain
    {
        std::vector<char> right(g.order(), 0);
        for (int i = 1; i <= 2 * L.r; ++i) right[L.u(i)] = right[L.v(i)] = 1;
        std::vector<int> crossing;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [x, y] = g.edge(e);
            if (right[x] != right[y]) crossing.push_back(e);
        }
        std::array<int, 4> cut = L.principal_cut();
        std::sort(cut.begin(), cut.end());
        if (crossing != std::vector<int>(cut.begin(), cut.end()))
            throw GraphError(Err::InternalCheckFailed, "principal cut does not separate the chains");
    }
    // each pole induces exactly its 4-cycle
    for (int j = 1; j <= L.poles(); ++j) {
        const auto& pv = L.pole_vertices[j - 1];
        int count = 0;
        for (int x : pv)
            for (int y : pv)
                if (x < y && g.adjacent(x, y)) ++count;
        if (count != 4) throw GraphError(Err::InternalCheckFailed, "pole does not induce a 4-cycle");
        for (int k = 0; k < 4; ++k)
            if (!g.adjacent(pv[k], pv[(k + 1) % 4]))
                throw GraphError(Err::InternalCheckFailed, "pole 4-cycle broken");
    }
    // boundary semiedges sit at the documented endvertices
    for (int j = 1; j <= L.poles(); ++j) {
        const auto& pv = L.pole_vertices[j - 1];
        const auto& pb = L.pole_boundary[j - 1];
        for (int k = 0; k < 4; ++k) {
            auto [x, y] = g.edge(pb[k]);
            if (x != pv[k] && y != pv[k])
                throw GraphError(Err::InternalCheckFailed, "boundary semiedge misplaced");
        }
    }
}

} // namespace detail

// Builds the papillon graph directly from its definition: outer cycle
// (u_1..u_t), spokes u_i v_i, and the inner cycle consisting of the rungs
// v_{2i-1}v_{2i}, the skips v_{2i-1}v_{2i+2} for i != s, and the two cut
// edges c = v_2 v_{2s+2} and b = v_{2s-1} v_{2r+2l-1}, where s = min(r,l).
inline Papillon papillon(int r, int l) {
    if (r < 1 || l < 1) throw GraphError(Err::PreconditionViolated, "papillon parameters must be at least 1");
    if (r > l) std::swap(r, l);   // P_{r,l} and P_{l,r} are isomorphic
    const int s = r;
    const int t = 2 * (r + l);

    PapillonLayout L;
    L.r = r;
    L.l = l;
    L.t = t;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * t);
    auto u = [&](int i) { return i - 1; };
    auto v = [&](int i) { return t + i - 1; };

    for (int i = 1; i < t; ++i) edges.push_back({u(i), u(i + 1)});
    edges.push_back({u(t), u(1)});                                   // edge a
    for (int i = 1; i <= t; ++i) edges.push_back({u(i), v(i)});
    for (int i = 1; i <= r + l; ++i) edges.push_back({v(2 * i - 1), v(2 * i)});
    for (int i = 1; i <= r + l - 1; ++i)
        if (i != s) edges.push_back({v(2 * i - 1), v(2 * i + 2)});
    edges.push_back({v(2), v(2 * s + 2)});                           // edge c
    edges.push_back({v(2 * s - 1), v(t - 1)});                       // edge b

    CubicGraph g(4 * (r + l), edges);

    for (int e = 0; e < t; ++e) L.outer_edges.push_back(e);
    for (int e = t; e < 2 * t; ++e) L.spoke_edges.push_back(e);
    for (int e = 2 * t; e < 3 * t; ++e) L.inner_edges.push_back(e);

    L.a = g.edge_id(u(1), u(t));
    L.b = g.edge_id(v(2 * r - 1), v(t - 1));
    L.c = g.edge_id(v(2), v(2 * r + 2));
    L.d = g.edge_id(u(2 * r), u(2 * r + 1));

    for (int j = 1; j <= r + l; ++j) {
        L.pole_vertices.push_back({u(2 * j - 1), u(2 * j), v(2 * j), v(2 * j - 1)});
        std::array<int, 4> pb;
        pb[0] = (j == 1) ? L.a : (j == r + 1) ? L.d : g.edge_id(u(2 * j - 2), u(2 * j - 1));
        pb[1] = (j == r) ? L.d : (j == r + l) ? L.a : g.edge_id(u(2 * j), u(2 * j + 1));
        pb[2] = (j == 1 || j == r + 1) ? L.c : g.edge_id(v(2 * j - 3), v(2 * j));
        pb[3] = (j == r || j == r + l) ? L.b : g.edge_id(v(2 * j - 1), v(2 * j + 2));
        for (int k = 0; k < 4; ++k)
            if (pb[k] < 0) throw GraphError(Err::InternalCheckFailed, "missing boundary edge");
        L.pole_boundary.push_back(pb);
    }

    Papillon p{std::move(g), std::move(L)};
    detail::validate_papillon(p);
    return p;
}

// Cycle permutation graph: two disjoint t-cycles (x_1..x_t) and (y_1..y_t)
// with x_i adjacent to y_{perm(i)}. Vertex ids: x_i -> i-1, y_j -> t+j-1.
inline CubicGraph cycle_permutation_graph(const Permutation& perm) {
    int t = perm.size();
    if (t < 4) throw GraphError(Err::PreconditionViolated, "cycle permutation graphs need t >= 4");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * t);
    for (int i = 0; i < t; ++i) edges.push_back({i, (i + 1) % t});
    for (int i = 0; i < t; ++i) edges.push_back({t + i, t + (i + 1) % t});
    for (int i = 0; i < t; ++i) edges.push_back({i, t + perm.apply0(i)});
    return CubicGraph(2 * t, edges);
}

// The involution sigma_{r,l} presenting the papillon graph as a cycle
// permutation graph. For r = 1 the published form (3 4)(5 6)... with fixed
// points 1 and 2; for r >= 2 adjacent transpositions on the right chain and
// the zigzag pairing 2r+2k-1 <-> 2r+2l-2k+1, 2r+2k <-> 2r+2l-2k+2 on the
// left one. Validated against the constructed graph before returning.
inline Permutation papillon_permutation(int r, int l) {
    if (r < 1 || l < 1) throw GraphError(Err::PreconditionViolated, "papillon parameters must be at least 1");
    if (r > l) std::swap(r, l);
    const int t = 2 * (r + l);
    Permutation p(t);
    if (r == 1) {
        for (int k = 1; k <= l; ++k) {
            p.set(2 * k + 1, 2 * k + 2);
            p.set(2 * k + 2, 2 * k + 1);
        }
    } else {
        for (int i = 1; i <= r; ++i) {
            p.set(2 * i - 1, 2 * i);
            p.set(2 * i, 2 * i - 1);
        }
        for (int k = 1; k <= l; ++k) {
            int odd_a = 2 * r + 2 * k - 1, odd_b = 2 * r + 2 * l - 2 * k + 1;
            int even_a = 2 * r + 2 * k, even_b = 2 * r + 2 * l - 2 * k + 2;
            p.set(odd_a, odd_b);
            p.set(odd_b, odd_a);
            p.set(even_a, even_b);
            p.set(even_b, even_a);
        }
    }
    if (!p.is_involution()) throw GraphError(Err::InternalCheckFailed, "sigma is not an involution");
    // (v_{sigma(1)}, ..., v_{sigma(t)}) must traverse the inner cycle
    Papillon pap = papillon(r, l);
    for (int i = 1; i <= t; ++i) {
        int x = pap.layout.v(p.apply(i));
        int y = pap.layout.v(p.apply(i % t + 1));
        if (!pap.graph.adjacent(x, y))
            throw GraphError(Err::InternalCheckFailed, "sigma does not traverse the inner cycle");
    }
    return p;
}

// The natural automorphism exchanging the outer and inner cycles:
// u_i -> v_{sigma(i)}, v_i -> u_{sigma(i)}. Returned as a vertex id mapping.
inline std::vector<int> papillon_swap_automorphism(int r, int l) {
    if (r > l) std::swap(r, l);
    Permutation sigma = papillon_permutation(r, l);
    int t = sigma.size();
    std::vector<int> map(2 * t);
    for (int i = 1; i <= t; ++i) {
        map[i - 1] = t + sigma.apply(i) - 1;       // u_i -> v_{sigma(i)}
        map[t + i - 1] = sigma.apply(i) - 1;       // v_i -> u_{sigma(i)}
    }
    return map;
}

inline CubicGraph named_graph(const std::string& name) {
    std::string n;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != '_')
            n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (n == "k4") {
        return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (n == "k33" || n == "k3.3") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) e.push_back({i, j});
        return CubicGraph(6, e);
    }
    if (n == "q3" || n == "cube") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 8; ++i)
            for (int b = 0; b < 3; ++b)
                if (i < (i ^ (1 << b))) e.push_back({i, i ^ (1 << b)});
        return CubicGraph(8, e);
    }
    if (n == "petersen") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
        for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
        for (int i = 0; i < 5; ++i) e.push_back({i + 5, (i + 2) % 5 + 5});
        return CubicGraph(10, e);
    }
    if (n == "prism6" || n == "hexprism") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 6; ++i) e.push_back({i, (i + 1) % 6});
        for (int i = 0; i < 6; ++i) e.push_back({i + 6, (i + 1) % 6 + 6});
        for (int i = 0; i < 6; ++i) e.push_back({i, i + 6});
        return CubicGraph(12, e);
    }
    throw GraphError(Err::UnknownName, name);
}

} // namespace cubelab
