#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubelab/errors.hpp"

namespace cubelab {

// A cycle is a sequence of mutually distinct vertices; consecutive vertices
// (cyclically) must be adjacent in the host graph.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// Immutable simple connected 3-regular graph. Vertex ids are 0..order-1,
// edge ids follow the order of the edge list passed at construction.
class CubicGraph {
public:
    struct Arc {
        int to;
        int edge;
    };

    CubicGraph(int order, const std::vector<std::pair<int, int>>& edge_list) : order_(order) {
        if (order < 4 || order % 2 != 0)
            throw GraphError(Err::OddOrder, "order must be even and at least 4, got " + std::to_string(order));
        if (static_cast<int>(edge_list.size()) != 3 * order / 2)
            throw GraphError(Err::NotCubic, "expected " + std::to_string(3 * order / 2) + " edges, got " +
                                               std::to_string(edge_list.size()));
        edges_.reserve(edge_list.size());
        degree_.assign(order, 0);
        adj_.assign(order, {});
        for (size_t e = 0; e < edge_list.size(); ++e) {
            int u = edge_list[e].first;
            int v = edge_list[e].second;
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw GraphError(Err::BadVertexId,
                                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw GraphError(Err::NotSimple, "loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (degree_[u] >= 3 || degree_[v] >= 3)
                throw GraphError(Err::NotCubic, "vertex degree exceeds 3");
            for (int k = 0; k < degree_[u]; ++k)
                if (adj_[u][k].to == v)
                    throw GraphError(Err::NotSimple,
                                     "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            adj_[u][degree_[u]++] = Arc{v, static_cast<int>(e)};
            adj_[v][degree_[v]++] = Arc{u, static_cast<int>(e)};
            edges_.push_back({u, v});
        }
        for (int v = 0; v < order; ++v)
            if (degree_[v] != 3)
                throw GraphError(Err::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                    std::to_string(degree_[v]));
        // connectivity
        std::vector<char> seen(order, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : adj_[v])
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    ++reached;
                    stack.push_back(a.to);
                }
        }
        if (reached != order) throw GraphError(Err::Disconnected, "graph is not connected");
        for (int v = 0; v < order; ++v)
            std::sort(adj_[v].begin(), adj_[v].end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::array<Arc, 3>& arcs(int v) const { return adj_[v]; }
    std::pair<int, int> edge(int e) const { return {edges_[e][0], edges_[e][1]}; }

    const std::vector<std::array<int, 2>>& edges() const { return edges_; }

    int edge_id(int u, int v) const {
        for (const Arc& a : adj_[u])
            if (a.to == v) return a.edge;
        return -1;
    }

    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) out.push_back({e[0], e[1]});
        return out;
    }

private:
    int order_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<int> degree_;
    std::vector<std::array<Arc, 3>> adj_;
};

inline CubicGraph build_graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
    return CubicGraph(order, edge_list);
}

// True iff consecutive vertices (cyclically) are adjacent and no vertex repeats.
inline bool cycle_is_valid(const CubicGraph& g, const Cycle& c) {
    int n = c.length();
    if (n < 3) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : c.vertices) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % n])) return false;
    return true;
}

inline std::vector<int> cycle_edge_ids(const CubicGraph& g, const Cycle& c) {
    std::vector<int> ids;
    int n = c.length();
    ids.reserve(n);
    for (int i = 0; i < n; ++i) {
        int e = g.edge_id(c.vertices[i], c.vertices[(i + 1) % n]);
        if (e < 0) throw GraphError(Err::InternalCheckFailed, "cycle uses a non-edge");
        ids.push_back(e);
    }
    return ids;
}

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> side;            // 0/1 per vertex when bipartite
    std::optional<Cycle> odd_cycle;   // witness otherwise
};

namespace detail {

// Walks parent pointers from u and w up to their lowest common ancestor in the
// BFS tree and stitches the two paths plus the edge uw into a cycle.
inline Cycle stitch_cycle(const std::vector<int>& parent, int u, int w) {
    std::vector<int> pu{u}, pw{w};
    for (int x = u; parent[x] >= 0; x = parent[x]) pu.push_back(parent[x]);
    for (int x = w; parent[x] >= 0; x = parent[x]) pw.push_back(parent[x]);
    // strip the common tail, keeping the meeting vertex once
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 1] == pw[pw.size() - 1] &&
           pu[pu.size() - 2] == pw[pw.size() - 2]) {
        pu.pop_back();
        pw.pop_back();
    }
    Cycle c;
    c.vertices.assign(pu.begin(), pu.end());
    for (size_t i = pw.size() - 1; i + 1 >= 2; --i) c.vertices.push_back(pw[i - 1]);
    return c;
}

} // namespace detail

inline BipartiteResult is_bipartite(const CubicGraph& g) {
    BipartiteResult res;
    res.side.assign(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        if (res.side[s] >= 0) continue;
        res.side[s] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& a : g.arcs(v)) {
                if (res.side[a.to] < 0) {
                    res.side[a.to] = res.side[v] ^ 1;
                    parent[a.to] = v;
                    queue.push_back(a.to);
                } else if (res.side[a.to] == res.side[v]) {
                    Cycle c = detail::stitch_cycle(parent, v, a.to);
                    if (!cycle_is_valid(g, c) || !c.odd())
                        throw GraphError(Err::InternalCheckFailed, "bad odd-cycle witness");
                    res.bipartite = false;
                    res.odd_cycle = std::move(c);
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

// Shortest cycle. BFS from every vertex; the first non-tree edge met at the
// lowest level sum wins, ties broken by lower source id then scan order.
inline std::pair<int, Cycle> girth_with_witness(const CubicGraph& g) {
    int best = g.order() + 1;
    Cycle best_cycle;
    std::vector<int> dist(g.order()), parent(g.order());
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (2 * dist[v] + 1 >= best) break;
            for (const auto& a : g.arcs(v)) {
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[v] + 1;
                    parent[a.to] = v;
                    queue.push_back(a.to);
                } else if (a.to != parent[v] && v != parent[a.to]) {
                    Cycle c = detail::stitch_cycle(parent, v, a.to);
                    if (cycle_is_valid(g, c) && c.length() < best) {
                        best = c.length();
                        best_cycle = c;
                    }
                }
            }
        }
    }
    if (best > g.order()) throw GraphError(Err::InternalCheckFailed, "cubic graph without a cycle");
    return {best, best_cycle};
}

inline int girth(const CubicGraph& g) { return girth_with_witness(g).first; }

struct OddGirthResult {
    bool bipartite = false;
    int length = 0;   // meaningful when !bipartite
    Cycle witness;    // odd cycle of minimum length
};

// Shortest odd cycle: minimum over all sources of 2*level+1 closed walks,
// realised by an edge joining two vertices on the same BFS level. The global
// minimum such walk is always a simple cycle.
inline OddGirthResult odd_girth(const CubicGraph& g) {
    OddGirthResult res;
    int best = g.order() + 2;
    int best_s = -1, best_u = -1, best_w = -1;
    std::vector<int> dist(g.order());
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (2 * dist[v] + 1 >= best) break;
            for (const auto& a : g.arcs(v)) {
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[v] + 1;
                    queue.push_back(a.to);
                } else if (dist[a.to] == dist[v] && v < a.to) {
                    int len = 2 * dist[v] + 1;
                    if (len < best) {
                        best = len;
                        best_s = s;
                        best_u = v;
                        best_w = a.to;
                    }
                }
            }
        }
    }
    if (best_s < 0) {
        res.bipartite = true;
        return res;
    }
    // rebuild parents for the winning source to materialise the witness
    std::vector<int> parent(g.order(), -1);
    std::fill(dist.begin(), dist.end(), -1);
    dist[best_s] = 0;
    queue.assign(1, best_s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (const auto& a : g.arcs(v))
            if (dist[a.to] < 0) {
                dist[a.to] = dist[v] + 1;
                parent[a.to] = v;
                queue.push_back(a.to);
            }
    }
    Cycle c = detail::stitch_cycle(parent, best_u, best_w);
    if (!cycle_is_valid(g, c) || !c.odd() || c.length() != best)
        throw GraphError(Err::InternalCheckFailed, "bad odd-girth witness");
    res.bipartite = false;
    res.length = best;
    res.witness = std::move(c);
    return res;
}

struct CyclicConnectivity {
    bool defined = false;
    int value = 0;
    std::vector<int> cut;   // witness edge ids when defined
};

namespace detail {

// Components of g with the given edges removed; returns true when at least
// two components contain a cycle (|E| >= |V| within the component).
inline bool cut_is_cycle_separating(const CubicGraph& g, const std::vector<int>& cut) {
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : cut) removed[e] = 1;
    std::vector<int> comp(g.order(), -1);
    int cyclic_components = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        int verts = 0, arcs = 0;
        comp[s] = s;
        stack.assign(1, s);
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
        if (arcs / 2 >= verts) {
            if (++cyclic_components >= 2) return true;
        }
    }
    return false;
}

} // namespace detail

// Smallest k such that removing some k edges leaves at least two components
// each containing a cycle. For a simple connected cubic graph a cycle-
// separating cut, when one exists, has size at most the girth (the boundary
// of a shortest cycle), so the exhaustive search is complete.
inline CyclicConnectivity cyclic_edge_connectivity(const CubicGraph& g, int order_bound = 24) {
    if (g.order() > order_bound)
        throw GraphError(Err::OrderTooLarge, "order " + std::to_string(g.order()) +
                                                 " exceeds brute-force bound " + std::to_string(order_bound));
    int gi = girth(g);
    int m = g.edge_count();
    CyclicConnectivity res;
    std::vector<int> cut;
    for (int k = 1; k <= gi; ++k) {
        cut.resize(k);
        for (int i = 0; i < k; ++i) cut[i] = i;
        while (true) {
            if (detail::cut_is_cycle_separating(g, cut)) {
                res.defined = true;
                res.value = k;
                res.cut = cut;
                return res;
            }
            int i = k - 1;
            while (i >= 0 && cut[i] == m - k + i) --i;
            if (i < 0) break;
            ++cut[i];
            for (int j = i + 1; j < k; ++j) cut[j] = cut[j - 1] + 1;
        }
    }
    return res;
}

// 3-connectedness by exhaustive vertex-pair deletion (desk scale).
inline bool is_three_connected(const CubicGraph& g) {
    int n = g.order();
    if (n <= 3) return false;
    std::vector<char> blocked(n, 0);
    std::vector<int> stack;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            std::fill(blocked.begin(), blocked.end(), 0);
            blocked[x] = blocked[y] = 1;
            int start = 0;
            while (blocked[start]) ++start;
            stack.assign(1, start);
            std::vector<char> seen(n, 0);
            seen[start] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& a : g.arcs(v))
                    if (!blocked[a.to] && !seen[a.to]) {
                        seen[a.to] = 1;
                        ++reached;
                        stack.push_back(a.to);
                    }
            }
            if (reached != n - 2) return false;
        }
    }
    return true;
}

} // namespace cubelab
