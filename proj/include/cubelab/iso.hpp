#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"
#include "cubelab/graph_io.hpp"

namespace cubelab {

namespace detail {

constexpr int kMaxCanonOrder = 32;

struct CanonScratch {
    int n = 0;
    std::array<uint32_t, kMaxCanonOrder> rows{};
    std::array<std::array<int, 3>, kMaxCanonOrder> nbs{};

    void load(int order, const uint32_t* adj) {
        n = order;
        for (int v = 0; v < n; ++v) {
            rows[v] = adj[v];
            int k = 0;
            uint32_t bits = adj[v];
            while (bits) {
                int w = __builtin_ctz(bits);
                bits &= bits - 1;
                nbs[v][k++] = w;
            }
            if (k != 3) throw GraphError(Err::NotCubic, "canonical form expects cubic adjacency");
        }
    }
};

// One round of colour refinement: the new colour of v is the rank of
// (colour(v), sorted neighbour colours). Iterates until the partition stops
// splitting. Colour values are ranks 0..k-1, invariant under relabelling.
inline void refine_colors(const CanonScratch& s, std::array<int, kMaxCanonOrder>& col) {
    const int n = s.n;
    std::array<uint32_t, kMaxCanonOrder> sig;
    std::array<int, kMaxCanonOrder> order;
    int colors = 0;
    for (int v = 0; v < n; ++v) colors = std::max(colors, col[v] + 1);
    while (true) {
        for (int v = 0; v < n; ++v) {
            int a = col[s.nbs[v][0]], b = col[s.nbs[v][1]], c = col[s.nbs[v][2]];
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            sig[v] = (static_cast<uint32_t>(col[v]) << 18) | (static_cast<uint32_t>(a) << 12) |
                     (static_cast<uint32_t>(b) << 6) | static_cast<uint32_t>(c);
        }
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n, [&](int x, int y) { return sig[x] < sig[y]; });
        int k = 0;
        std::array<int, kMaxCanonOrder> next;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k;
            next[order[i]] = k;
        }
        ++k;
        bool stable = (k == colors);
        col = next;
        colors = k;
        if (stable) break;
    }
}

struct CanonResult {
    std::array<int, kMaxCanonOrder> relabel{};   // old id -> canonical id
    std::string g6;
};

// Individualisation-refinement search over the colour partition; among all
// discrete leaves the lexicographically smallest adjacency encoding wins.
inline void canon_search(const CanonScratch& s, std::array<int, kMaxCanonOrder> col, CanonResult& best,
                         bool& have_best) {
    const int n = s.n;
    refine_colors(s, col);
    int colors = 0;
    for (int v = 0; v < n; ++v) colors = std::max(colors, col[v] + 1);
    if (colors == n) {
        std::array<uint32_t, kMaxCanonOrder> relrows{};
        for (int v = 0; v < n; ++v) {
            uint32_t bits = s.rows[v];
            uint32_t out = 0;
            while (bits) {
                int w = __builtin_ctz(bits);
                bits &= bits - 1;
                out |= 1u << col[w];
            }
            relrows[col[v]] = out;
        }
        std::string enc;
        enc.push_back(static_cast<char>(n + 63));
        int acc = 0, nbits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | ((relrows[i] >> j) & 1u);
                if (++nbits == 6) {
                    enc.push_back(static_cast<char>(acc + 63));
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits > 0) enc.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
        if (!have_best || enc < best.g6) {
            have_best = true;
            best.g6 = std::move(enc);
            for (int v = 0; v < n; ++v) best.relabel[v] = col[v];
        }
        return;
    }
    // first (lowest-colour) non-singleton cell is the branching target
    int target = -1;
    std::array<int, kMaxCanonOrder> count{};
    for (int v = 0; v < n; ++v) ++count[col[v]];
    for (int c = 0; c < colors; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    for (int v = 0; v < n; ++v) {
        if (col[v] != target) continue;
        std::array<int, kMaxCanonOrder> next;
        for (int u = 0; u < n; ++u) next[u] = col[u] * 2 + 1;
        next[v] = col[v] * 2;
        canon_search(s, next, best, have_best);
    }
}

inline CanonResult canonical_raw(int n, const uint32_t* adj) {
    if (n < 1 || n > kMaxCanonOrder)
        throw GraphError(Err::OrderTooLarge, "canonical form supports at most 32 vertices");
    CanonScratch s;
    s.load(n, adj);
    std::array<int, kMaxCanonOrder> col{};
    CanonResult best;
    bool have = false;
    canon_search(s, col, best, have);
    return best;
}

} // namespace detail

struct CanonicalLabel {
    std::string bytes;              // graph6 of the canonically relabelled graph
    std::vector<int> relabelling;   // old id -> canonical id

    bool operator==(const CanonicalLabel& o) const { return bytes == o.bytes; }
};

inline CanonicalLabel canonical_form(const CubicGraph& g) {
    if (g.order() > detail::kMaxCanonOrder)
        throw GraphError(Err::OrderTooLarge, "canonical form supports at most 32 vertices");
    std::array<uint32_t, detail::kMaxCanonOrder> rows{};
    for (const auto& e : g.edges()) {
        rows[e[0]] |= 1u << e[1];
        rows[e[1]] |= 1u << e[0];
    }
    detail::CanonResult r = detail::canonical_raw(g.order(), rows.data());
    CanonicalLabel lab;
    lab.bytes = r.g6;
    lab.relabelling.assign(r.relabel.begin(), r.relabel.begin() + g.order());
    return lab;
}

// Canonical graph6 straight from adjacency rows; hot path for the census.
inline std::string canonical_g6(int n, const uint32_t* rows) { return detail::canonical_raw(n, rows).g6; }

inline CubicGraph relabel(const CubicGraph& g, const std::vector<int>& map) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({map[e[0]], map[e[1]]});
    return CubicGraph(g.order(), edges);
}

inline bool verify_automorphism(const CubicGraph& g, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.order()) throw GraphError(Err::NotABijection, "mapping size mismatch");
    std::vector<char> hit(g.order(), 0);
    for (int v : map) {
        if (v < 0 || v >= g.order() || hit[v]) throw GraphError(Err::NotABijection, "mapping is not a bijection");
        hit[v] = 1;
    }
    for (const auto& e : g.edges())
        if (!g.adjacent(map[e[0]], map[e[1]])) return false;
    return true;
}

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;   // g vertex id -> h vertex id when isomorphic
};

// Direct backtracking isomorphism with colour-refinement pruning; independent
// of the canonical-form route (the two are cross-checked in the test suite).
inline IsoResult are_isomorphic(const CubicGraph& g, const CubicGraph& h) {
    IsoResult res;
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return res;
    if (g.order() > detail::kMaxCanonOrder)
        throw GraphError(Err::OrderTooLarge, "isomorphism search supports at most 32 vertices");
    const int n = g.order();

    detail::CanonScratch sg, sh;
    std::array<uint32_t, detail::kMaxCanonOrder> rg{}, rh{};
    for (const auto& e : g.edges()) {
        rg[e[0]] |= 1u << e[1];
        rg[e[1]] |= 1u << e[0];
    }
    for (const auto& e : h.edges()) {
        rh[e[0]] |= 1u << e[1];
        rh[e[1]] |= 1u << e[0];
    }
    sg.load(n, rg.data());
    sh.load(n, rh.data());
    std::array<int, detail::kMaxCanonOrder> cg{}, ch{};
    detail::refine_colors(sg, cg);
    detail::refine_colors(sh, ch);
    // colour class sizes must match
    std::array<int, detail::kMaxCanonOrder> sizes_g{}, sizes_h{};
    for (int v = 0; v < n; ++v) ++sizes_g[cg[v]];
    for (int v = 0; v < n; ++v) ++sizes_h[ch[v]];
    if (sizes_g != sizes_h) return res;

    std::vector<int> map(n, -1), used(n, 0);
    // match vertices in an order that keeps the mapped part connected
    std::vector<int> order;
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (const auto& a : g.arcs(v))
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
    }

    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || ch[w] != cg[v]) continue;
            bool ok = true;
            for (const auto& a : g.arcs(v)) {
                if (map[a.to] < 0) continue;
                if (!((rh[w] >> map[a.to]) & 1u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return res;
    // validate the mapping both ways
    for (const auto& e : g.edges())
        if (!h.adjacent(map[e[0]], map[e[1]]))
            throw GraphError(Err::InternalCheckFailed, "isomorphism mapping broken");
    res.isomorphic = true;
    res.mapping = std::move(map);
    return res;
}

} // namespace cubelab
