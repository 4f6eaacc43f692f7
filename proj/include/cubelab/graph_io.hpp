#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"

#include <json.hpp>

namespace cubelab {

// Header-less graph6 for graphs on at most 62 vertices: one byte n+63, then
// the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit
// groups, each offset by 63.
inline std::string graph6_encode(int order, const std::vector<std::pair<int, int>>& edges) {
    if (order < 1 || order > 62)
        throw GraphError(Err::OrderTooLarge, "graph6 writer supports 1..62 vertices");
    std::vector<char> bit(static_cast<size_t>(order) * order, 0);
    for (auto [u, v] : edges) {
        bit[static_cast<size_t>(u) * order + v] = 1;
        bit[static_cast<size_t>(v) * order + u] = 1;
    }
    std::string out;
    out.push_back(static_cast<char>(order + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | bit[static_cast<size_t>(i) * order + j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline std::string graph6_encode(const CubicGraph& g) { return graph6_encode(g.order(), g.edge_list()); }

struct DecodedGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;
};

inline DecodedGraph graph6_decode(const std::string& s) {
    if (s.empty()) throw GraphError(Err::ParseError, "empty graph6 string");
    size_t pos = 0;
    if (s[0] == '~') throw GraphError(Err::ParseError, "graph6 long form (order > 62) not supported");
    int order = static_cast<int>(static_cast<unsigned char>(s[pos++])) - 63;
    if (order < 1 || order > 62) throw GraphError(Err::ParseError, "bad graph6 order byte");
    long long need_bits = static_cast<long long>(order) * (order - 1) / 2;
    size_t need_bytes = static_cast<size_t>((need_bits + 5) / 6);
    if (s.size() - pos != need_bytes)
        throw GraphError(Err::ParseError, "graph6 length mismatch for order " + std::to_string(order));
    DecodedGraph out;
    out.order = order;
    int i = 0, j = 1;
    for (size_t b = 0; b < need_bytes; ++b) {
        int c = static_cast<int>(static_cast<unsigned char>(s[pos + b])) - 63;
        if (c < 0 || c > 63) throw GraphError(Err::ParseError, "bad graph6 byte");
        for (int k = 5; k >= 0; --k) {
            if (j >= order) break;
            if ((c >> k) & 1) out.edges.push_back({i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return out;
}

inline CubicGraph read_graph6_line(const std::string& line) {
    DecodedGraph d = graph6_decode(line);
    return CubicGraph(d.order, d.edges);
}

// Plain edge-list text: order on the first line, one "u v" pair per line.
inline std::string edges_encode(const CubicGraph& g) {
    std::ostringstream os;
    os << g.order() << "\n";
    for (const auto& e : g.edges()) os << e[0] << " " << e[1] << "\n";
    return os.str();
}

inline CubicGraph edges_decode(std::istream& in) {
    int order;
    if (!(in >> order)) throw GraphError(Err::ParseError, "missing order line");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.push_back({u, v});
    return CubicGraph(order, edges);
}

inline nlohmann::json graph_to_json(const CubicGraph& g) {
    nlohmann::json j;
    j["order"] = g.order();
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : g.edges()) es.push_back({e[0], e[1]});
    j["edges"] = es;
    return j;
}

inline CubicGraph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("order") || !j.contains("edges")) throw GraphError(Err::ParseError, "missing order/edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return CubicGraph(j["order"].get<int>(), edges);
}

} // namespace cubelab
