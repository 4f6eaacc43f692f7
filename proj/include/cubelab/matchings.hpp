#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"
#include "cubelab/generators.hpp"

namespace cubelab {

struct PerfectMatching {
    std::vector<int> edges;   // sorted edge ids
    uint64_t mask = 0;

    bool contains(int e) const { return (mask >> e) & 1u; }
};

inline PerfectMatching make_matching(const CubicGraph& g, std::vector<int> edges) {
    if (g.edge_count() > 64) throw GraphError(Err::OrderTooLarge, "edge masks support at most 64 edges");
    PerfectMatching m;
    std::sort(edges.begin(), edges.end());
    m.edges = std::move(edges);
    std::vector<char> covered(g.order(), 0);
    for (int e : m.edges) {
        if (e < 0 || e >= g.edge_count()) throw GraphError(Err::NotAMatching, "bad edge id");
        auto [u, v] = g.edge(e);
        if (covered[u] || covered[v]) throw GraphError(Err::NotAMatching, "vertex covered twice");
        covered[u] = covered[v] = 1;
        m.mask |= 1ull << e;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!covered[v]) throw GraphError(Err::NotAMatching, "vertex " + std::to_string(v) + " uncovered");
    return m;
}

// All perfect matchings, each exactly once, by backtracking on the lowest-id
// uncovered vertex with candidate edges taken in edge-id order. The output
// order is deterministic, which keeps certificates reproducible.
inline std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g) {
    if (g.edge_count() > 64) throw GraphError(Err::OrderTooLarge, "edge masks support at most 64 edges");
    std::vector<PerfectMatching> out;
    std::vector<char> covered(g.order(), 0);
    std::vector<int> chosen;
    chosen.reserve(g.order() / 2);

    struct Frame {
        int vertex;
        std::array<CubicGraph::Arc, 3> arcs;
        int arc_count;
        int next;
    };
    std::vector<Frame> stack;
    stack.reserve(g.order() / 2 + 1);

    auto lowest_uncovered = [&]() {
        for (int v = 0; v < g.order(); ++v)
            if (!covered[v]) return v;
        return -1;
    };

    auto push_vertex = [&](int v) {
        Frame f;
        f.vertex = v;
        f.arc_count = 0;
        for (const auto& a : g.arcs(v))
            if (!covered[a.to]) f.arcs[f.arc_count++] = a;
        std::sort(f.arcs.begin(), f.arcs.begin() + f.arc_count,
                  [](const CubicGraph::Arc& x, const CubicGraph::Arc& y) { return x.edge < y.edge; });
        f.next = 0;
        stack.push_back(f);
    };

    int v0 = lowest_uncovered();
    if (v0 >= 0) push_vertex(v0);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next > 0) {
            // undo previous choice
            const auto& prev = f.arcs[f.next - 1];
            covered[f.vertex] = covered[prev.to] = 0;
            chosen.pop_back();
        }
        if (f.next >= f.arc_count) {
            stack.pop_back();
            continue;
        }
        const auto& a = f.arcs[f.next++];
        covered[f.vertex] = covered[a.to] = 1;
        chosen.push_back(a.edge);
        int v = lowest_uncovered();
        if (v < 0)
            out.push_back(make_matching(g, chosen));
        else
            push_vertex(v);
    }
    return out;
}

struct TwoFactor {
    std::vector<int> edges;     // sorted edge ids
    std::vector<Cycle> cycles;  // decomposition, each starting at its lowest vertex
};

inline void validate_matching(const CubicGraph& g, const PerfectMatching& m) { make_matching(g, m.edges); }

// The 2-factor obtained after deleting the edges of M.
inline TwoFactor complementary_two_factor(const CubicGraph& g, const PerfectMatching& m) {
    validate_matching(g, m);
    TwoFactor f;
    std::vector<std::array<int, 2>> nb(g.order(), {-1, -1});
    for (int e = 0; e < g.edge_count(); ++e) {
        if (m.contains(e)) continue;
        f.edges.push_back(e);
        auto [u, v] = g.edge(e);
        nb[u][nb[u][0] < 0 ? 0 : 1] = v;
        nb[v][nb[v][0] < 0 ? 0 : 1] = u;
    }
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        Cycle c;
        int prev = -1, cur = s;
        do {
            seen[cur] = 1;
            c.vertices.push_back(cur);
            int lo = std::min(nb[cur][0], nb[cur][1]);
            int hi = std::max(nb[cur][0], nb[cur][1]);
            int nxt = (lo != prev) ? lo : hi;
            prev = cur;
            cur = nxt;
        } while (cur != s);
        f.cycles.push_back(std::move(c));
    }
    return f;
}

struct ThreeEdgeColouring {
    std::vector<int> colour;   // per edge id, values 1..3; colour class 1 is the input matching
};

struct ColouringResult {
    std::optional<ThreeEdgeColouring> colouring;
    std::optional<Cycle> odd_cycle;   // witness when the extension fails

    bool ok() const { return colouring.has_value(); }
};

inline bool colouring_is_proper(const CubicGraph& g, const ThreeEdgeColouring& col) {
    if (static_cast<int>(col.colour.size()) != g.edge_count()) return false;
    for (int v = 0; v < g.order(); ++v) {
        int mask = 0;
        for (const auto& a : g.arcs(v)) {
            int c = col.colour[a.edge];
            if (c < 1 || c > 3) return false;
            if (mask & (1 << c)) return false;
            mask |= 1 << c;
        }
    }
    return true;
}

// Colours M with colour 1 and alternately colours each cycle of the
// complementary 2-factor with colours 2 and 3; fails on the first odd cycle.
inline ColouringResult extend_to_three_edge_colouring(const CubicGraph& g, const PerfectMatching& m) {
    TwoFactor f = complementary_two_factor(g, m);
    ColouringResult res;
    for (const Cycle& c : f.cycles)
        if (c.odd()) {
            res.odd_cycle = c;
            return res;
        }
    ThreeEdgeColouring col;
    col.colour.assign(g.edge_count(), 1);
    for (const Cycle& c : f.cycles) {
        int n = c.length();
        for (int i = 0; i < n; ++i) {
            int e = g.edge_id(c.vertices[i], c.vertices[(i + 1) % n]);
            col.colour[e] = (i % 2 == 0) ? 2 : 3;
        }
    }
    if (!colouring_is_proper(g, col))
        throw GraphError(Err::InternalCheckFailed, "constructed colouring is not proper");
    res.colouring = std::move(col);
    return res;
}

struct E2FCertificate {
    PerfectMatching pm;
    ThreeEdgeColouring colouring;
};

struct E2FResult {
    bool e2f = false;
    std::vector<E2FCertificate> certificates;   // one per perfect matching when e2f
    std::optional<PerfectMatching> witness;     // failing matching otherwise
    std::optional<Cycle> odd_cycle;
};

// Even-2-factorability, checked along both routes of the defining
// equivalence: cycle parity of every complementary 2-factor, and the
// colouring extension of every perfect matching. The two must agree.
inline E2FResult is_e2f(const CubicGraph& g) {
    std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw GraphError(Err::NoPerfectMatching, "graph has no perfect matching");
    E2FResult res;
    for (const PerfectMatching& m : pms) {
        TwoFactor f = complementary_two_factor(g, m);
        bool parity_ok = true;
        for (const Cycle& c : f.cycles)
            if (c.odd()) {
                parity_ok = false;
                break;
            }
        ColouringResult cr = extend_to_three_edge_colouring(g, m);
        if (cr.ok() != parity_ok)
            throw GraphError(Err::InternalCheckFailed, "parity and colouring checkers disagree");
        if (!parity_ok) {
            res.e2f = false;
            res.witness = m;
            res.odd_cycle = cr.odd_cycle;
            res.certificates.clear();
            return res;
        }
        res.certificates.push_back({m, *cr.colouring});
    }
    res.e2f = true;
    return res;
}

struct HamExtension {
    PerfectMatching second;   // the matching N with M union N a Hamiltonian cycle
    Cycle cycle;
};

namespace detail {

// Extracts the single cycle of a 2-regular edge set covering every vertex;
// returns nothing when the set is not a spanning single cycle.
inline std::optional<Cycle> spanning_cycle_from_edges(const CubicGraph& g, const std::vector<int>& edge_ids) {
    if (static_cast<int>(edge_ids.size()) != g.order()) return std::nullopt;
    std::vector<std::array<int, 2>> nb(g.order(), {-1, -1});
    for (int e : edge_ids) {
        auto [u, v] = g.edge(e);
        if (nb[u][1] >= 0 || nb[v][1] >= 0) return std::nullopt;
        nb[u][nb[u][0] < 0 ? 0 : 1] = v;
        nb[v][nb[v][0] < 0 ? 0 : 1] = u;
    }
    for (int v = 0; v < g.order(); ++v)
        if (nb[v][1] < 0) return std::nullopt;
    Cycle c;
    int prev = -1, cur = 0;
    do {
        c.vertices.push_back(cur);
        int lo = std::min(nb[cur][0], nb[cur][1]);
        int hi = std::max(nb[cur][0], nb[cur][1]);
        int nxt = (lo != prev) ? lo : hi;
        prev = cur;
        cur = nxt;
        if (static_cast<int>(c.vertices.size()) > g.order()) return std::nullopt;
    } while (cur != 0);
    if (static_cast<int>(c.vertices.size()) != g.order()) return std::nullopt;
    return c;
}

} // namespace detail

// Searches for a second perfect matching N inside the complementary 2-factor
// of M with M union N a Hamiltonian cycle. Each even cycle of the 2-factor
// contributes exactly two alternating selections, so the search space is
// 2^(number of cycles); candidates are tried in increasing order of the
// selection bit-vector and the first spanning cycle wins.
inline std::optional<HamExtension> pmh_extension(const CubicGraph& g, const PerfectMatching& m) {
    TwoFactor f = complementary_two_factor(g, m);
    for (const Cycle& c : f.cycles)
        if (c.odd()) return std::nullopt;
    int k = static_cast<int>(f.cycles.size());
    std::vector<std::array<std::vector<int>, 2>> selections(k);
    for (int i = 0; i < k; ++i) {
        const Cycle& c = f.cycles[i];
        int n = c.length();
        for (int p = 0; p < n; ++p) {
            int e = g.edge_id(c.vertices[p], c.vertices[(p + 1) % n]);
            selections[i][p % 2].push_back(e);
        }
    }
    std::vector<int> n_edges;
    n_edges.reserve(g.order() / 2);
    // counting upwards with cycle i at bit k-1-i tries the selection
    // bit-vectors (b_1, ..., b_k) in lexicographic order
    for (uint64_t bits = 0; bits < (1ull << k); ++bits) {
        n_edges.clear();
        for (int i = 0; i < k; ++i) {
            const auto& sel = selections[i][(bits >> (k - 1 - i)) & 1u];
            n_edges.insert(n_edges.end(), sel.begin(), sel.end());
        }
        std::vector<int> h_edges = m.edges;
        h_edges.insert(h_edges.end(), n_edges.begin(), n_edges.end());
        if (auto cyc = detail::spanning_cycle_from_edges(g, h_edges)) {
            HamExtension ext;
            ext.second = make_matching(g, n_edges);
            ext.cycle = std::move(*cyc);
            return ext;
        }
    }
    return std::nullopt;
}

struct PMHCertificate {
    PerfectMatching pm;
    PerfectMatching second;
    Cycle cycle;
};

struct PMHResult {
    bool pmh = false;
    std::vector<PMHCertificate> certificates;   // one per perfect matching when pmh
    std::optional<PerfectMatching> witness;     // non-extendable matching otherwise
};

inline PMHResult is_pmh(const CubicGraph& g) {
    std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw GraphError(Err::NoPerfectMatching, "graph has no perfect matching");
    PMHResult res;
    for (const PerfectMatching& m : pms) {
        auto ext = pmh_extension(g, m);
        if (!ext) {
            res.pmh = false;
            res.witness = m;
            res.certificates.clear();
            return res;
        }
        res.certificates.push_back({m, ext->second, ext->cycle});
    }
    res.pmh = true;
    return res;
}

inline bool is_two_factor_hamiltonian(const CubicGraph& g) {
    std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw GraphError(Err::NoPerfectMatching, "graph has no perfect matching");
    for (const PerfectMatching& m : pms)
        if (complementary_two_factor(g, m).cycles.size() != 1) return false;
    return true;
}

struct PHResult {
    bool ph = false;
    std::vector<std::pair<int, int>> witness_pairing;   // failing pairing otherwise
};

// Pairing-Hamiltonicity: every perfect matching of the complete graph on
// V(g) must extend to a Hamiltonian cycle whose remaining edges lie in g.
// Equivalently, some perfect matching N of g is disjoint from the pairing
// and their union is a single spanning cycle.
inline PHResult is_ph(const CubicGraph& g, int order_bound = 12) {
    int n = g.order();
    if (n > order_bound)
        throw GraphError(Err::OrderTooLarge, "is_ph bound is " + std::to_string(order_bound) + " vertices");
    std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
    std::vector<std::vector<int>> pm_partner;
    for (const PerfectMatching& m : pms) {
        std::vector<int> partner(n, -1);
        for (int e : m.edges) {
            auto [u, v] = g.edge(e);
            partner[u] = v;
            partner[v] = u;
        }
        pm_partner.push_back(std::move(partner));
    }

    std::vector<int> pairing(n, -1);
    PHResult res;
    res.ph = true;

    auto union_is_hamiltonian = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int v = 0; v < n; ++v)
            if (a[v] == b[v]) return false;   // shared pair collapses the cycle
        int visited = 0, cur = 0;
        bool use_a = true;
        do {
            cur = use_a ? a[cur] : b[cur];
            use_a = !use_a;
            ++visited;
        } while (cur != 0);
        return visited == n;
    };

    // enumerate pairings: repeatedly pair the lowest unpaired vertex
    std::vector<int> unpaired_stack;
    auto rec = [&](auto&& self) -> bool {   // returns false to abort (witness found)
        int v = 0;
        while (v < n && pairing[v] >= 0) ++v;
        if (v == n) {
            for (const auto& partner : pm_partner)
                if (union_is_hamiltonian(pairing, partner)) return true;
            res.ph = false;
            for (int x = 0; x < n; ++x)
                if (x < pairing[x]) res.witness_pairing.push_back({x, pairing[x]});
            return false;
        }
        for (int w = v + 1; w < n; ++w) {
            if (pairing[w] >= 0) continue;
            pairing[v] = w;
            pairing[w] = v;
            bool keep = self(self);
            pairing[v] = pairing[w] = -1;
            if (!keep) return false;
        }
        return true;
    };
    rec(rec);
    return res;
}

// ---------------------------------------------------------------------------
// Principal-cut machinery on papillon layouts
// ---------------------------------------------------------------------------

struct CutProfile {
    int k = 0;                    // |M ∩ {a,b,c,d}|
    std::vector<int> per_pole;    // |M ∩ boundary(T_j)| for each pole j
};

// Computes |M ∩ X| and the per-pole boundary counts. For balanced layouts
// the lemma-level facts are enforced: all counts equal k; when k = 2 the cut
// intersection is {a,d} or {b,c} and no pole contributes its pair of left
// semiedges {e1,e3} or right semiedges {e2,e4}.
inline CutProfile principal_cut_profile(const Papillon& p, const PerfectMatching& m) {
    validate_matching(p.graph, m);
    const PapillonLayout& L = p.layout;
    CutProfile prof;
    for (int e : L.principal_cut())
        if (m.contains(e)) ++prof.k;
    for (int j = 1; j <= L.poles(); ++j) {
        int cnt = 0;
        for (int e : L.pole_boundary[j - 1])
            if (m.contains(e)) ++cnt;
        prof.per_pole.push_back(cnt);
    }
    if (L.balanced()) {
        for (int j = 1; j <= L.poles(); ++j)
            if (prof.per_pole[j - 1] != prof.k)
                throw GraphError(Err::LemmaViolation, "pole " + std::to_string(j) + " boundary count " +
                                                          std::to_string(prof.per_pole[j - 1]) + " != k = " +
                                                          std::to_string(prof.k));
        if (prof.k == 2) {
            bool ad = m.contains(L.a) && m.contains(L.d);
            bool bc = m.contains(L.b) && m.contains(L.c);
            if (!ad && !bc)
                throw GraphError(Err::LemmaViolation, "k = 2 but the cut intersection is not {a,d} or {b,c}");
            for (int j = 1; j <= L.poles(); ++j) {
                const auto& pb = L.pole_boundary[j - 1];
                bool e1 = m.contains(pb[0]), e2 = m.contains(pb[1]);
                bool e3 = m.contains(pb[2]), e4 = m.contains(pb[3]);
                if ((e1 && e3 && !e2 && !e4) || (e2 && e4 && !e1 && !e3))
                    throw GraphError(Err::LemmaViolation,
                                     "pole " + std::to_string(j) + " contributes a left or right semiedge pair");
            }
        }
    }
    return prof;
}

enum class ChainSymmetry { Symmetric, Asymmetric };

inline int phi(ChainSymmetry s) { return s == ChainSymmetry::Symmetric ? +1 : -1; }

namespace detail {

enum class PoleTrace { Spokes, Parallel };

// With M avoiding every boundary edge, each pole is covered internally either
// by its two spokes or by its top edge plus rung.
inline PoleTrace pole_trace(const Papillon& p, const PerfectMatching& m, int j) {
    const PapillonLayout& L = p.layout;
    const CubicGraph& g = p.graph;
    int ul = L.pole_vertices[j - 1][0], ur = L.pole_vertices[j - 1][1];
    int lr = L.pole_vertices[j - 1][3];
    int top = g.edge_id(ul, ur);
    int rung = g.edge_id(lr, L.pole_vertices[j - 1][2]);
    int spoke_l = g.edge_id(ul, lr);
    int spoke_r = g.edge_id(ur, L.pole_vertices[j - 1][2]);
    bool spokes = m.contains(spoke_l) && m.contains(spoke_r);
    bool parallel = m.contains(top) && m.contains(rung);
    if (spokes == parallel)
        throw GraphError(Err::InternalCheckFailed, "pole trace is neither spokes nor parallel");
    return spokes ? PoleTrace::Spokes : PoleTrace::Parallel;
}

} // namespace detail

// Symmetry of the 2-chain (T_j, T_{j+1}) with respect to a perfect matching
// avoiding the principal cut: symmetric when both poles carry the same trace
// (all four spokes, or both top/rung pairs), asymmetric otherwise.
inline ChainSymmetry chain_symmetry(const Papillon& p, const PerfectMatching& m, int j) {
    const PapillonLayout& L = p.layout;
    if (!L.balanced()) throw GraphError(Err::PreconditionViolated, "chain symmetry needs a balanced layout");
    int n = L.r;
    if (j < 1 || j >= 2 * n || j == n)
        throw GraphError(Err::PreconditionViolated, "2-chain index must lie inside one chain");
    CutProfile prof = principal_cut_profile(p, m);
    if (prof.k != 0) throw GraphError(Err::PreconditionViolated, "matching must avoid the principal cut");
    return detail::pole_trace(p, m, j) == detail::pole_trace(p, m, j + 1) ? ChainSymmetry::Symmetric
                                                                          : ChainSymmetry::Asymmetric;
}

namespace detail {

// Spanning path of the 2-chain (T_j, T_{j+1}) from s to t inside the chain's
// ten edges, required to contain every matching edge of the 2-chain.
inline std::vector<int> two_chain_spanning_path(const Papillon& p, const PerfectMatching& m, int j, int s, int t) {
    const PapillonLayout& L = p.layout;
    const CubicGraph& g = p.graph;
    std::array<int, 8> verts;
    for (int k = 0; k < 4; ++k) {
        verts[k] = L.pole_vertices[j - 1][k];
        verts[4 + k] = L.pole_vertices[j][k];
    }
    auto local = [&](int v) {
        for (int k = 0; k < 8; ++k)
            if (verts[k] == v) return k;
        return -1;
    };
    std::vector<int> chain_edges;
    for (int jj : {j, j + 1}) {
        const auto& pv = L.pole_vertices[jj - 1];
        for (int k = 0; k < 4; ++k) chain_edges.push_back(g.edge_id(pv[k], pv[(k + 1) % 4]));
    }
    chain_edges.push_back(g.edge_id(L.u(2 * j), L.u(2 * j + 1)));           // top connector
    chain_edges.push_back(g.edge_id(L.v(2 * j - 1), L.v(2 * j + 2)));       // bottom connector
    uint64_t required = 0;
    for (int e : chain_edges)
        if (m.contains(e)) required |= 1ull << e;

    std::array<std::vector<std::pair<int, int>>, 8> adj;   // (local vertex, edge id)
    for (int e : chain_edges) {
        auto [x, y] = g.edge(e);
        int lx = local(x), ly = local(y);
        adj[lx].push_back({ly, e});
        adj[ly].push_back({lx, e});
    }
    int ls = local(s), lt = local(t);
    std::vector<int> path;
    std::vector<int> result;
    uint64_t used_required = 0;
    std::array<char, 8> visited{};

    auto rec = [&](auto&& self, int cur) -> bool {
        path.push_back(verts[cur]);
        visited[cur] = 1;
        if (static_cast<int>(path.size()) == 8) {
            if (cur == lt && used_required == required) {
                result = path;
                path.pop_back();
                visited[cur] = 0;
                return true;
            }
        } else {
            for (auto [nxt, e] : adj[cur]) {
                if (visited[nxt]) continue;
                bool is_req = m.contains(e);
                if (is_req) used_required |= 1ull << e;
                if (self(self, nxt)) {
                    if (is_req) used_required &= ~(1ull << e);
                    path.pop_back();
                    visited[cur] = 0;
                    return true;
                }
                if (is_req) used_required &= ~(1ull << e);
            }
        }
        path.pop_back();
        visited[cur] = 0;
        return false;
    };
    if (!rec(rec, ls))
        throw GraphError(Err::LemmaViolation, "no spanning path through the 2-chain");
    return result;
}

inline HamExtension finish_extension(const CubicGraph& g, const PerfectMatching& m, std::vector<int> h_edges) {
    std::sort(h_edges.begin(), h_edges.end());
    h_edges.erase(std::unique(h_edges.begin(), h_edges.end()), h_edges.end());
    auto cyc = spanning_cycle_from_edges(g, h_edges);
    if (!cyc) throw GraphError(Err::LemmaViolation, "constructed edge set is not a Hamiltonian cycle");
    std::vector<int> n_edges;
    for (int e : h_edges)
        if (!m.contains(e)) n_edges.push_back(e);
    HamExtension ext;
    ext.second = make_matching(g, n_edges);
    ext.cycle = std::move(*cyc);
    return ext;
}

} // namespace detail

// Extends a perfect matching of a balanced papillon graph with even n to a
// Hamiltonian cycle by the constructive case analysis on k = |M ∩ X|:
//   k=2: the complement of each pole is a 3-edge path; its end edges form N.
//   k=4: the explicit companion matching (two pole-1 spokes, then top/rung
//        pairs everywhere else).
//   k=0: classify the 2-chains of each half as symmetric or asymmetric; with
//        both parities even, thread one spanning path through each half and
//        close up with the edges a and d; otherwise pair M with the unique
//        all-boundary matching.
// The result is validated (spanning single cycle containing M) before return.
inline HamExtension constructive_pmh_extension(const Papillon& p, const PerfectMatching& m) {
    const PapillonLayout& L = p.layout;
    const CubicGraph& g = p.graph;
    if (!L.balanced() || L.r % 2 != 0)
        throw GraphError(Err::PreconditionViolated, "constructive extension needs a balanced layout with even n");
    validate_matching(g, m);
    const int n = L.r;
    CutProfile prof = principal_cut_profile(p, m);

    if (prof.k == 2) {
        std::vector<int> h_edges = m.edges;
        for (int j = 1; j <= 2 * n; ++j) {
            const auto& pv = L.pole_vertices[j - 1];
            std::vector<int> path_edges;
            for (int k = 0; k < 4; ++k) {
                int e = g.edge_id(pv[k], pv[(k + 1) % 4]);
                if (!m.contains(e)) path_edges.push_back(e);
            }
            if (path_edges.size() != 3)
                throw GraphError(Err::LemmaViolation, "pole complement is not a 3-edge path");
            // the end edges are those covering a degree-1 vertex of the path
            std::vector<int> deg(g.order(), 0);
            for (int e : path_edges) {
                auto [x, y] = g.edge(e);
                ++deg[x];
                ++deg[y];
            }
            for (int e : path_edges) {
                auto [x, y] = g.edge(e);
                if (deg[x] == 1 || deg[y] == 1) h_edges.push_back(e);
            }
        }
        return detail::finish_extension(g, m, std::move(h_edges));
    }

    if (prof.k == 4) {
        std::vector<int> h_edges = m.edges;
        h_edges.push_back(g.edge_id(L.u(1), L.v(1)));
        h_edges.push_back(g.edge_id(L.u(2), L.v(2)));
        for (int j = 2; j <= 2 * n; ++j) {
            h_edges.push_back(g.edge_id(L.u(2 * j - 1), L.u(2 * j)));
            h_edges.push_back(g.edge_id(L.v(2 * j - 1), L.v(2 * j)));
        }
        return detail::finish_extension(g, m, std::move(h_edges));
    }

    // k = 0
    int prod_right = 1, prod_left = 1;
    for (int j = 1; j <= n - 1; j += 2) prod_right *= phi(chain_symmetry(p, m, j));
    for (int j = n + 1; j <= 2 * n - 1; j += 2) prod_left *= phi(chain_symmetry(p, m, j));

    if (prod_right == 1 && prod_left == 1) {
        // one spanning path per half, entered and left on the upper track
        auto build_half = [&](int first_pole) {
            std::vector<int> verts;
            bool up = true;
            for (int j = first_pole; j <= first_pole + n - 2; j += 2) {
                bool sym = detail::pole_trace(p, m, j) == detail::pole_trace(p, m, j + 1);
                bool exit_up = sym ? up : !up;
                int entry = up ? L.u(2 * j - 1) : L.v(2 * j);
                int exit = exit_up ? L.u(2 * (j + 1)) : L.v(2 * (j + 1) - 1);
                std::vector<int> seg = detail::two_chain_spanning_path(p, m, j, entry, exit);
                verts.insert(verts.end(), seg.begin(), seg.end());
                up = exit_up;
            }
            if (!up) throw GraphError(Err::LemmaViolation, "half path does not exit on the upper track");
            return verts;
        };
        std::vector<int> cycle_verts = build_half(1);
        std::vector<int> left = build_half(n + 1);
        cycle_verts.insert(cycle_verts.end(), left.begin(), left.end());
        Cycle c{std::move(cycle_verts)};
        if (!cycle_is_valid(g, c) || c.length() != g.order())
            throw GraphError(Err::LemmaViolation, "concatenated halves are not a Hamiltonian cycle");
        std::vector<int> h_edges = cycle_edge_ids(g, c);
        for (int e : m.edges)
            if (std::find(h_edges.begin(), h_edges.end(), e) == h_edges.end())
                throw GraphError(Err::LemmaViolation, "constructed cycle misses a matching edge");
        return detail::finish_extension(g, m, std::move(h_edges));
    }

    // odd number of asymmetric 2-chains in some half: M plus the unique
    // all-boundary matching is a Hamiltonian cycle
    std::vector<int> h_edges = m.edges;
    for (const auto& pb : L.pole_boundary)
        for (int e : pb) h_edges.push_back(e);
    return detail::finish_extension(g, m, std::move(h_edges));
}

// ---------------------------------------------------------------------------
// Chromatic index (Class I test), independent of the matching machinery
// ---------------------------------------------------------------------------

// Proper 3-edge-colourability by backtracking over edge colours with forced
// propagation: an edge whose endpoints already see two colours is forced.
inline bool is_class_one(const CubicGraph& g) {
    int m = g.edge_count();
    std::vector<int> colour(m, 0);
    std::vector<int> vmask(g.order(), 0);   // colours used at each vertex

    auto avail = [&](int e) {
        auto [u, v] = g.edge(e);
        return (~(vmask[u] | vmask[v])) & 0b1110;
    };

    auto rec = [&](auto&& self) -> bool {
        int best = -1, best_count = 4;
        for (int e = 0; e < m; ++e) {
            if (colour[e]) continue;
            int a = avail(e);
            int cnt = __builtin_popcount(static_cast<unsigned>(a));
            if (cnt == 0) return false;
            if (cnt < best_count) {
                best_count = cnt;
                best = e;
                if (cnt == 1) break;
            }
        }
        if (best < 0) return true;
        auto [u, v] = g.edge(best);
        int a = avail(best);
        for (int c = 1; c <= 3; ++c) {
            if (!((a >> c) & 1)) continue;
            colour[best] = c;
            vmask[u] |= 1 << c;
            vmask[v] |= 1 << c;
            if (self(self)) return true;
            colour[best] = 0;
            vmask[u] &= ~(1 << c);
            vmask[v] &= ~(1 << c);
        }
        return false;
    };
    return rec(rec);
}

} // namespace cubelab
