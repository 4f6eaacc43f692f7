#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"

#include <json.hpp>

namespace cubelab {

struct Semiedge {
    int vertex;
    std::string label;
};

// A multipole: vertices, proper edges and labelled semiedges. Degrees
// (edge incidences plus semiedge incidences) never exceed 3. Values are
// immutable; join returns a new multipole.
class Multipole {
public:
    Multipole() = default;

    Multipole(int order, std::vector<std::pair<int, int>> edges, std::vector<Semiedge> semiedges)
        : order_(order), edges_(std::move(edges)), semiedges_(std::move(semiedges)) {
        std::vector<int> deg(order_, 0);
        for (auto [u, v] : edges_) {
            if (u < 0 || u >= order_ || v < 0 || v >= order_)
                throw GraphError(Err::BadVertexId, "edge endpoint out of range");
            if (u == v) throw GraphError(Err::Loop, "loop in multipole");
            ++deg[u];
            ++deg[v];
        }
        for (const Semiedge& s : semiedges_) {
            if (s.vertex < 0 || s.vertex >= order_) throw GraphError(Err::BadVertexId, "semiedge endpoint out of range");
            ++deg[s.vertex];
        }
        for (int v = 0; v < order_; ++v)
            if (deg[v] > 3) throw GraphError(Err::NotCubic, "vertex degree exceeds 3 in multipole");
        for (size_t i = 0; i < semiedges_.size(); ++i)
            for (size_t j = i + 1; j < semiedges_.size(); ++j)
                if (semiedges_[i].label == semiedges_[j].label)
                    throw GraphError(Err::PreconditionViolated, "duplicate semiedge label " + semiedges_[i].label);
    }

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Semiedge>& semiedges() const { return semiedges_; }

    int semiedge_count() const { return static_cast<int>(semiedges_.size()); }

    int semiedge_vertex(const std::string& label) const {
        for (const Semiedge& s : semiedges_)
            if (s.label == label) return s.vertex;
        throw GraphError(Err::UnknownSemiedge, label);
    }

    bool has_semiedge(const std::string& label) const {
        for (const Semiedge& s : semiedges_)
            if (s.label == label) return true;
        return false;
    }

    bool edge_between(int u, int v) const {
        for (auto [a, b] : edges_)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }

    // Joins two semiedges of this multipole: both are deleted and their
    // endvertices made adjacent. Keeping the result simple is enforced.
    Multipole join_semiedges(const std::string& la, const std::string& lb) const {
        if (la == lb) throw GraphError(Err::UnknownSemiedge, "cannot join a semiedge with itself: " + la);
        int u = semiedge_vertex(la);
        int v = semiedge_vertex(lb);
        if (u == v) throw GraphError(Err::Loop, "semiedges " + la + " and " + lb + " share endvertex");
        if (edge_between(u, v))
            throw GraphError(Err::MultiEdge, "endvertices of " + la + " and " + lb + " already adjacent");
        std::vector<std::pair<int, int>> edges = edges_;
        edges.push_back({u, v});
        std::vector<Semiedge> rest;
        rest.reserve(semiedges_.size() - 2);
        for (const Semiedge& s : semiedges_)
            if (s.label != la && s.label != lb) rest.push_back(s);
        return Multipole(order_, std::move(edges), std::move(rest));
    }

    // Disjoint union; semiedge labels of both operands must stay unique.
    static Multipole disjoint_union(const Multipole& a, const Multipole& b) {
        std::vector<std::pair<int, int>> edges = a.edges_;
        for (auto [u, v] : b.edges_) edges.push_back({u + a.order_, v + a.order_});
        std::vector<Semiedge> semis = a.semiedges_;
        for (const Semiedge& s : b.semiedges_) semis.push_back({s.vertex + a.order_, s.label});
        return Multipole(a.order_ + b.order_, std::move(edges), std::move(semis));
    }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Semiedge> semiedges_;
};

inline Multipole join(const Multipole& a, const std::string& la, const Multipole& b, const std::string& lb) {
    if (&a == &b) return a.join_semiedges(la, lb);
    return Multipole::disjoint_union(a, b).join_semiedges(la, lb);
}

namespace detail {
inline std::string pole_label(int k, int index) { return "f" + std::to_string(k) + "^" + std::to_string(index); }
} // namespace detail

// The C4-pole: a 4-cycle (z1,z2,z3,z4) with one semiedge per vertex.
// f1/f2 are the upper left/right semiedges, f3/f4 the lower left/right ones.
inline Multipole c4_pole(int index = 0) {
    auto lbl = [&](int k) { return index == 0 ? "f" + std::to_string(k) : detail::pole_label(k, index); };
    return Multipole(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                     {{0, lbl(1)}, {1, lbl(2)}, {2, lbl(3)}, {3, lbl(4)}});
}

// A chain of C4-poles joined right-to-left: the upper/lower right semiedges
// of pole j meet the upper/lower left semiedges of pole j+1.
struct Chain {
    Multipole pole;
    int length = 0;
    std::string e1, e2, e3, e4;   // exposed semiedges: upper L, upper R, lower L, lower R
};

inline Chain chain(int n, int first_index = 1) {
    if (n < 1) throw GraphError(Err::PreconditionViolated, "chain length must be at least 1");
    Multipole acc = c4_pole(first_index);
    for (int j = 1; j < n; ++j) {
        Multipole next = c4_pole(first_index + j);
        acc = Multipole::disjoint_union(acc, next)
                  .join_semiedges(detail::pole_label(2, first_index + j - 1), detail::pole_label(1, first_index + j))
                  .join_semiedges(detail::pole_label(4, first_index + j - 1), detail::pole_label(3, first_index + j));
    }
    Chain c;
    c.pole = std::move(acc);
    c.length = n;
    c.e1 = detail::pole_label(1, first_index);
    c.e2 = detail::pole_label(2, first_index + n - 1);
    c.e3 = detail::pole_label(3, first_index);
    c.e4 = detail::pole_label(4, first_index + n - 1);
    return c;
}

inline CubicGraph multipole_to_cubic_graph(const Multipole& m) {
    if (m.semiedge_count() != 0)
        throw GraphError(Err::PreconditionViolated, "multipole still has semiedges");
    return CubicGraph(m.order(), m.edges());
}

// Closes a right r-chain and a left l-chain into a papillon graph by the four
// prescribed joins: e1^1-e2^{r+l}, e2^r-e1^{r+1}, e3^1-e3^{r+1}, e4^r-e4^{r+l}.
inline CubicGraph papillon_from_chains(int r, int l) {
    if (r < 1 || l < 1) throw GraphError(Err::PreconditionViolated, "chain lengths must be at least 1");
    Chain right = chain(r, 1);
    Chain left = chain(l, r + 1);
    Multipole m = Multipole::disjoint_union(right.pole, left.pole)
                      .join_semiedges(right.e1, left.e2)
                      .join_semiedges(right.e2, left.e1)
                      .join_semiedges(right.e3, left.e3)
                      .join_semiedges(right.e4, left.e4);
    return multipole_to_cubic_graph(m);
}

inline nlohmann::json multipole_to_json(const Multipole& m) {
    nlohmann::json j;
    j["vertices"] = m.order();
    nlohmann::json es = nlohmann::json::array();
    for (auto [u, v] : m.edges()) es.push_back({u, v});
    j["edges"] = es;
    nlohmann::json ss = nlohmann::json::array();
    for (const Semiedge& s : m.semiedges()) ss.push_back({{"vertex", s.vertex}, {"label", s.label}});
    j["semiedges"] = ss;
    return j;
}

} // namespace cubelab
