#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubelab/cubic_graph.hpp"
#include "cubelab/errors.hpp"
#include "cubelab/generators.hpp"
#include "cubelab/graph_io.hpp"
#include "cubelab/iso.hpp"
#include "cubelab/matchings.hpp"
#include "cubelab/multipole.hpp"
#include "cubelab/permutation.hpp"

#include <json.hpp>

namespace cubelab {

struct CensusOptions {
    int threads = 0;   // 0: CUBELAB_THREADS env var, else hardware concurrency
    bool allow_odd = false;
    bool with_certificates = true;
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CUBELAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

struct GraphRecord {
    std::string g6;   // canonical graph6; identifies the graph in reports
    int order = 0;
    int girth = 0;
    bool e2f = false;
    bool pmh = false;
    bool class_one = false;
    std::optional<int> cyclic_connectivity;    // computed for E2F graphs; -1 encodes "undefined"
    long long hits = 0;                        // presentation orbits (perm) or input lines (g6)
    std::string example_sigma;                 // smallest permutation reaching the class
    std::vector<E2FCertificate> e2f_certificates;
    std::vector<PMHCertificate> pmh_certificates;
};

struct CensusReport {
    std::string kind;   // "perm" or "g6"
    nlohmann::json parameters;
    long long examined = 0;
    long long non_bipartite_labelled = 0;   // perm census only
    std::vector<GraphRecord> graphs;        // survivors, sorted by (order, g6)
    bool odd_t_all_non_e2f = true;          // meaningful for allow_odd runs
    long long elapsed_ms = 0;
    int threads = 1;

    long long survivors() const { return static_cast<long long>(graphs.size()); }
    long long count_e2f() const {
        return std::count_if(graphs.begin(), graphs.end(), [](const GraphRecord& r) { return r.e2f; });
    }
    long long count_pmh() const {
        return std::count_if(graphs.begin(), graphs.end(), [](const GraphRecord& r) { return r.pmh; });
    }
    long long count_class_one() const {
        return std::count_if(graphs.begin(), graphs.end(), [](const GraphRecord& r) { return r.class_one; });
    }
};

namespace detail {

// For odd t the two t-cycles are odd, so the graph is never bipartite. For
// even t each cycle's 2-colouring is forced up to a flip, so the graph is
// bipartite iff i + sigma(i) has constant parity.
inline bool cpg_is_bipartite(const std::vector<int>& s) {
    if (s.size() % 2 != 0) return false;
    int p0 = (0 + s[0]) & 1;
    for (size_t i = 1; i < s.size(); ++i)
        if (((static_cast<int>(i) + s[i]) & 1) != p0) return false;
    return true;
}

// True when sigma is the lexicographic minimum of its orbit under the
// relabelings that preserve the two-cycles-plus-spokes presentation:
// sigma -> beta o sigma^ o rho with rho, beta dihedral and sigma^ in
// {sigma, sigma inverse}. Every orbit member is itself enumerated, so
// skipping non-minima loses no isomorphism class.
inline bool cpg_orbit_minimal(const std::vector<int>& s, std::vector<int>& inv_scratch) {
    const int t = static_cast<int>(s.size());
    for (int i = 0; i < t; ++i) inv_scratch[s[i]] = i;
    const std::vector<int>* hats[2] = {&s, &inv_scratch};
    for (const auto* hat_ptr : hats) {
        const std::vector<int>& hat = *hat_ptr;
        for (int fr = 0; fr < 2; ++fr)
            for (int kr = 0; kr < t; ++kr)
                for (int ft = 0; ft < 2; ++ft)
                    for (int kt = 0; kt < t; ++kt) {
                        for (int i = 0; i < t; ++i) {
                            int ri = fr ? (kr - i + t) % t : (kr + i) % t;
                            int x = hat[ri];
                            int v = ft ? (kt - x + t) % t : (kt + x) % t;
                            if (v < s[i]) return false;
                            if (v > s[i]) break;
                        }
                    }
    }
    return true;
}

inline void cpg_rows(const std::vector<int>& s, uint32_t* rows) {
    const int t = static_cast<int>(s.size());
    for (int i = 0; i < 2 * t; ++i) rows[i] = 0;
    auto add = [&](int a, int b) {
        rows[a] |= 1u << b;
        rows[b] |= 1u << a;
    };
    for (int i = 0; i < t; ++i) add(i, (i + 1) % t);
    for (int i = 0; i < t; ++i) add(t + i, t + (i + 1) % t);
    for (int i = 0; i < t; ++i) add(i, t + s[i]);
}

struct ClassInfo {
    long long hits = 0;
    std::vector<int> min_sigma;
};

// Runs fn on a pool of workers; the first exception thrown by any worker is
// rethrown on the calling thread after every worker has joined.
template <typename Fn>
inline void run_workers(int threads, Fn&& fn) {
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto guarded = [&]() {
        try {
            fn();
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(guarded);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline void classify_record(GraphRecord& rec, bool with_certificates) {
    CubicGraph g = read_graph6_line(rec.g6);
    rec.order = g.order();
    rec.girth = girth(g);
    E2FResult e2f = is_e2f(g);
    rec.e2f = e2f.e2f;
    rec.class_one = is_class_one(g);
    if (rec.e2f) {
        if (with_certificates) rec.e2f_certificates = std::move(e2f.certificates);
        PMHResult pmh = is_pmh(g);
        rec.pmh = pmh.pmh;
        if (rec.pmh && with_certificates) rec.pmh_certificates = std::move(pmh.certificates);
        CyclicConnectivity cc = cyclic_edge_connectivity(g, 32);
        rec.cyclic_connectivity = cc.defined ? cc.value : -1;
    } else {
        rec.pmh = false;   // PMH implies E2F
    }
}

} // namespace detail

// Iterates all sigma in S_t, keeps the non-bipartite cycle permutation
// graphs (their girth is automatically at least 4 for t >= 4), dedups by
// canonical form and classifies every surviving isomorphism class.
inline CensusReport census_cycle_permutation(int t, const CensusOptions& opts = {}) {
    if (t < 4 || t > 16) throw GraphError(Err::PreconditionViolated, "census supports 4 <= t <= 16");
    if (t % 2 != 0 && !opts.allow_odd)
        throw GraphError(Err::OddT, "odd t gives two odd cycles as a 2-factor; pass allow_odd to verify");
    auto start = std::chrono::steady_clock::now();
    int threads = resolve_threads(opts.threads);

    std::map<std::string, detail::ClassInfo> classes;
    std::mutex merge_mutex;
    std::atomic<long long> examined{0}, non_bip{0};
    std::atomic<int> next_block{0};
    const int blocks = t * (t - 1);

    auto worker = [&]() {
        std::map<std::string, detail::ClassInfo> local;
        long long my_examined = 0, my_non_bip = 0;
        std::vector<int> sigma(t), inv(t);
        std::vector<uint32_t> rows(2 * t);
        while (true) {
            int blk = next_block.fetch_add(1);
            if (blk >= blocks) break;
            int first = blk / (t - 1);
            int second_idx = blk % (t - 1);
            std::vector<int> rest;
            for (int v = 0; v < t; ++v)
                if (v != first) rest.push_back(v);
            int second = rest[second_idx];
            std::vector<int> tail;
            for (int v : rest)
                if (v != second) tail.push_back(v);
            std::sort(tail.begin(), tail.end());
            do {
                sigma[0] = first;
                sigma[1] = second;
                for (size_t i = 0; i < tail.size(); ++i) sigma[i + 2] = tail[i];
                ++my_examined;
                if (detail::cpg_is_bipartite(sigma)) continue;
                ++my_non_bip;
                if (!detail::cpg_orbit_minimal(sigma, inv)) continue;
                detail::cpg_rows(sigma, rows.data());
                std::string key = canonical_g6(2 * t, rows.data());
                auto& info = local[key];
                info.hits += 1;
                if (info.min_sigma.empty() || sigma < info.min_sigma) info.min_sigma = sigma;
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
        examined += my_examined;
        non_bip += my_non_bip;
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [key, info] : local) {
            auto& g = classes[key];
            g.hits += info.hits;
            if (g.min_sigma.empty() || (!info.min_sigma.empty() && info.min_sigma < g.min_sigma))
                g.min_sigma = info.min_sigma;
        }
    };

    detail::run_workers(threads, worker);

    CensusReport rep;
    rep.kind = "perm";
    rep.parameters = {{"t", t}, {"allow_odd", opts.allow_odd}};
    rep.examined = examined.load();
    rep.non_bipartite_labelled = non_bip.load();
    rep.threads = threads;

    // hits count the presentation orbits reaching each class, not raw sigmas
    for (auto& [key, info] : classes) {
        GraphRecord rec;
        rec.g6 = key;
        rec.hits = info.hits;
        std::vector<int> images(t);
        for (int i = 0; i < t; ++i) images[i] = info.min_sigma[i] + 1;
        rec.example_sigma = Permutation::from_images_1based(images).cycle_notation();
        rep.graphs.push_back(std::move(rec));
    }
    // per-graph classification is pure: farm it out and keep the map order
    std::atomic<size_t> next_rec{0};
    detail::run_workers(threads, [&]() {
        while (true) {
            size_t i = next_rec.fetch_add(1);
            if (i >= rep.graphs.size()) break;
            detail::classify_record(rep.graphs[i], opts.with_certificates);
            if (rep.graphs[i].girth < 4)
                throw GraphError(Err::InternalCheckFailed, "cycle permutation graph with girth < 4");
        }
    });
    for (const GraphRecord& rec : rep.graphs)
        if (t % 2 != 0 && rec.e2f) rep.odd_t_all_non_e2f = false;
    std::sort(rep.graphs.begin(), rep.graphs.end(), [](const GraphRecord& a, const GraphRecord& b) {
        return a.order != b.order ? a.order < b.order : a.g6 < b.g6;
    });
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct G6CensusLine {
    int line_no;
    CubicGraph graph;
};

// Classification census over an externally produced graph6 corpus: validate,
// filter to non-bipartite 3-connected graphs of girth at least 4, dedup by
// canonical form and classify E2F / Class I / cyclic connectivity.
inline CensusReport census_graph6(std::istream& in, const CensusOptions& opts = {},
                                  const std::string& source_name = "<stream>") {
    auto start = std::chrono::steady_clock::now();
    std::string line;
    int line_no = 0;
    std::vector<G6CensusLine> inputs;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            inputs.push_back({line_no, read_graph6_line(line)});
        } catch (const GraphError& e) {
            if (e.code() == Err::ParseError)
                throw GraphError(Err::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
            throw GraphError(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    int threads = resolve_threads(opts.threads);
    std::map<std::string, long long> survivors;   // canonical g6 -> hits
    std::mutex merge_mutex;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        std::map<std::string, long long> local;
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= inputs.size()) break;
            const CubicGraph& g = inputs[i].graph;
            if (is_bipartite(g).bipartite) continue;
            if (girth(g) < 4) continue;
            if (!is_three_connected(g)) continue;
            local[canonical_form(g).bytes] += 1;
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [k, v] : local) survivors[k] += v;
    };
    detail::run_workers(threads, worker);

    CensusReport rep;
    rep.kind = "g6";
    rep.parameters = {{"input", source_name}};
    rep.examined = static_cast<long long>(inputs.size());
    rep.threads = threads;
    for (auto& [key, hits] : survivors) {
        GraphRecord rec;
        rec.g6 = key;
        rec.hits = hits;
        rep.graphs.push_back(std::move(rec));
    }
    std::atomic<size_t> next_rec{0};
    detail::run_workers(threads, [&]() {
        while (true) {
            size_t i = next_rec.fetch_add(1);
            if (i >= rep.graphs.size()) break;
            detail::classify_record(rep.graphs[i], opts.with_certificates);
        }
    });
    std::sort(rep.graphs.begin(), rep.graphs.end(), [](const GraphRecord& a, const GraphRecord& b) {
        return a.order != b.order ? a.order < b.order : a.g6 < b.g6;
    });
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline CensusReport census_graph6_file(const std::string& path, const CensusOptions& opts = {}) {
    std::ifstream in(path);
    if (!in) throw GraphError(Err::ParseError, "cannot open " + path);
    return census_graph6(in, opts, path);
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json edge_pairs_json(const CubicGraph& g, const std::vector<int>& edge_ids,
                                      const PapillonLayout* layout = nullptr) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : edge_ids) {
        auto [u, v] = g.edge(e);
        if (layout) {
            arr.push_back({{"edge", {u, v}}, {"label", layout->edge_label(g, e)}});
        } else {
            arr.push_back({u, v});
        }
    }
    return arr;
}

} // namespace detail

inline nlohmann::json report_to_json(const CensusReport& rep) {
    nlohmann::json j;
    j["census"] = rep.kind;
    j["parameters"] = rep.parameters;
    j["totals"] = {{"examined", rep.examined}, {"survivors", rep.survivors()}};
    if (rep.kind == "perm") j["totals"]["non_bipartite_labelled"] = rep.non_bipartite_labelled;
    long long girth_ge4 = std::count_if(rep.graphs.begin(), rep.graphs.end(),
                                        [](const GraphRecord& r) { return r.girth >= 4; });
    j["counts"] = {{"e2f", rep.count_e2f()},
                   {"pmh", rep.count_pmh()},
                   {"class1", rep.count_class_one()},
                   {"non_bipartite", rep.survivors()},
                   {"girth_ge4", girth_ge4}};
    nlohmann::json hist = nlohmann::json::object();
    for (const GraphRecord& r : rep.graphs) {
        if (!r.e2f || !r.cyclic_connectivity) continue;
        std::string key = *r.cyclic_connectivity < 0 ? "undefined" : std::to_string(*r.cyclic_connectivity);
        hist[key] = hist.value(key, 0) + 1;
    }
    j["cyclic_connectivity_histogram"] = hist;
    if (rep.parameters.value("allow_odd", false)) j["odd_t_all_non_e2f"] = rep.odd_t_all_non_e2f;

    nlohmann::json per_order = nlohmann::json::object();
    nlohmann::json graphs = nlohmann::json::array();
    for (const GraphRecord& r : rep.graphs) {
        CubicGraph g = read_graph6_line(r.g6);
        nlohmann::json rec;
        rec["g6"] = r.g6;
        rec["order"] = r.order;
        rec["girth"] = r.girth;
        rec["e2f"] = r.e2f;
        rec["pmh"] = r.pmh;
        rec["class1"] = r.class_one;
        if (r.cyclic_connectivity)
            rec["cyclic_connectivity"] =
                *r.cyclic_connectivity < 0 ? nlohmann::json("undefined") : nlohmann::json(*r.cyclic_connectivity);
        else
            rec["cyclic_connectivity"] = nullptr;
        rec[rep.kind == "perm" ? "presentation_orbits" : "hits"] = r.hits;
        if (!r.example_sigma.empty()) rec["sigma"] = r.example_sigma;
        if (!r.e2f_certificates.empty()) {
            nlohmann::json certs = nlohmann::json::array();
            for (const E2FCertificate& c : r.e2f_certificates)
                certs.push_back({{"pm", detail::edge_pairs_json(g, c.pm.edges)},
                                 {"colouring", c.colouring.colour}});
            rec["e2f_certificates"] = certs;
        }
        if (!r.pmh_certificates.empty()) {
            nlohmann::json certs = nlohmann::json::array();
            for (const PMHCertificate& c : r.pmh_certificates)
                certs.push_back({{"pm", detail::edge_pairs_json(g, c.pm.edges)},
                                 {"second", detail::edge_pairs_json(g, c.second.edges)},
                                 {"cycle", c.cycle.vertices}});
            rec["pmh_certificates"] = certs;
        }
        graphs.push_back(rec);

        std::string ok = std::to_string(r.order);
        if (!per_order.contains(ok))
            per_order[ok] = {{"survivors", 0}, {"e2f", 0}, {"pmh", 0}, {"class1", 0},
                             {"cyclic_connectivity_histogram", nlohmann::json::object()}};
        per_order[ok]["survivors"] = per_order[ok]["survivors"].get<int>() + 1;
        if (r.e2f) per_order[ok]["e2f"] = per_order[ok]["e2f"].get<int>() + 1;
        if (r.pmh) per_order[ok]["pmh"] = per_order[ok]["pmh"].get<int>() + 1;
        if (r.class_one) per_order[ok]["class1"] = per_order[ok]["class1"].get<int>() + 1;
        if (r.e2f && r.cyclic_connectivity) {
            std::string key = *r.cyclic_connectivity < 0 ? "undefined" : std::to_string(*r.cyclic_connectivity);
            auto& h = per_order[ok]["cyclic_connectivity_histogram"];
            h[key] = h.value(key, 0) + 1;
        }
    }
    j["per_order"] = per_order;
    j["graphs"] = graphs;
    j["meta"] = {{"elapsed_ms", rep.elapsed_ms}, {"threads", rep.threads}};
    return j;
}

inline nlohmann::json json_without_meta(nlohmann::json j) {
    j.erase("meta");
    return j;
}

// ---------------------------------------------------------------------------
// Report verifier: re-validates every certificate independently of the
// search bookkeeping that produced the report.
// ---------------------------------------------------------------------------

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(const std::string& p) {
        ok = false;
        problems.push_back(p);
    }
};

inline VerifyOutcome verify_report(const nlohmann::json& j) {
    VerifyOutcome out;
    if (!j.contains("graphs")) {
        out.fail("report has no graphs array");
        return out;
    }
    long long e2f_count = 0, pmh_count = 0, class1_count = 0;
    for (const auto& rec : j["graphs"]) {
        std::string g6 = rec.value("g6", "");
        CubicGraph g = read_graph6_line(g6);
        auto pm_from_json = [&](const nlohmann::json& pm_json) {
            std::vector<int> ids;
            for (const auto& p : pm_json) {
                int u, v;
                if (p.is_object()) {
                    u = p["edge"][0].get<int>();
                    v = p["edge"][1].get<int>();
                } else {
                    u = p[0].get<int>();
                    v = p[1].get<int>();
                }
                int e = g.edge_id(u, v);
                if (e < 0) throw GraphError(Err::ParseError, "certificate edge not in graph");
                ids.push_back(e);
            }
            return make_matching(g, ids);
        };
        bool claims_e2f = rec.value("e2f", false);
        bool claims_pmh = rec.value("pmh", false);
        bool claims_class1 = rec.value("class1", false);
        e2f_count += claims_e2f;
        pmh_count += claims_pmh;
        class1_count += claims_class1;
        if (claims_pmh && !claims_e2f) out.fail(g6 + ": pmh without e2f");
        if (claims_e2f && !claims_class1) out.fail(g6 + ": e2f without class1");

        if (claims_class1 != is_class_one(g)) out.fail(g6 + ": class1 flag wrong");
        {
            E2FResult ver = is_e2f(g);
            if (ver.e2f != claims_e2f) out.fail(g6 + ": e2f flag wrong");
        }

        if (rec.contains("e2f_certificates")) {
            std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
            if (rec["e2f_certificates"].size() != pms.size())
                out.fail(g6 + ": e2f certificate count != perfect matching count");
            for (const auto& cert : rec["e2f_certificates"]) {
                try {
                    PerfectMatching m = pm_from_json(cert["pm"]);
                    ThreeEdgeColouring col;
                    col.colour = cert["colouring"].get<std::vector<int>>();
                    if (!colouring_is_proper(g, col)) {
                        out.fail(g6 + ": improper colouring certificate");
                        continue;
                    }
                    for (int e = 0; e < g.edge_count(); ++e)
                        if ((col.colour[e] == 1) != m.contains(e)) {
                            out.fail(g6 + ": colour class 1 is not the certified matching");
                            break;
                        }
                } catch (const GraphError& ge) {
                    out.fail(g6 + ": bad e2f certificate: " + ge.what());
                }
            }
        }
        if (rec.contains("pmh_certificates")) {
            std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
            if (rec["pmh_certificates"].size() != pms.size())
                out.fail(g6 + ": pmh certificate count != perfect matching count");
            for (const auto& cert : rec["pmh_certificates"]) {
                try {
                    PerfectMatching m = pm_from_json(cert["pm"]);
                    PerfectMatching second = pm_from_json(cert["second"]);
                    Cycle cyc{cert["cycle"].get<std::vector<int>>()};
                    if (!cycle_is_valid(g, cyc) || cyc.length() != g.order()) {
                        out.fail(g6 + ": pmh certificate cycle is not Hamiltonian");
                        continue;
                    }
                    uint64_t cyc_mask = 0;
                    for (int e : cycle_edge_ids(g, cyc)) cyc_mask |= 1ull << e;
                    if (cyc_mask != (m.mask | second.mask) || (m.mask & second.mask))
                        out.fail(g6 + ": pmh certificate cycle is not the disjoint union of the matchings");
                } catch (const GraphError& ge) {
                    out.fail(g6 + ": bad pmh certificate: " + ge.what());
                }
            }
        }
        if (rec.contains("cyclic_connectivity") && !rec["cyclic_connectivity"].is_null() && claims_e2f) {
            CyclicConnectivity cc = cyclic_edge_connectivity(g, 32);
            nlohmann::json expect = cc.defined ? nlohmann::json(cc.value) : nlohmann::json("undefined");
            if (rec["cyclic_connectivity"] != expect) out.fail(g6 + ": cyclic connectivity wrong");
        }
    }
    if (j.contains("counts")) {
        if (j["counts"].value("e2f", -1) != e2f_count) out.fail("counts.e2f mismatch");
        if (j["counts"].value("pmh", -1) != pmh_count) out.fail("counts.pmh mismatch");
        if (j["counts"].value("class1", -1) != class1_count) out.fail("counts.class1 mismatch");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem suite over the papillon family
// ---------------------------------------------------------------------------

struct TheoremCheck {
    std::string name;
    int r = 0, l = 0;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    long long elapsed_ms = 0;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.pass; });
    }
};

// For every 1 <= r <= l with r+l <= max_sum: E2F holds; PMH holds exactly
// when r and l are both even; girth 4 and shortest odd cycle 2r+3; the swap
// automorphism verifies; the chain construction and the permutation route
// agree with the direct construction; all pairs are non-isomorphic; and on
// balanced graphs the principal-cut bookkeeping and (for even n) the
// constructive extension agree with brute force over every perfect matching.
inline TheoremReport theorem_suite(int max_sum) {
    if (max_sum < 2) throw GraphError(Err::PreconditionViolated, "max_sum must be at least 2");
    auto start = std::chrono::steady_clock::now();
    TheoremReport rep;
    auto add = [&](const std::string& name, int r, int l, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, r, l, pass, detail});
    };

    std::vector<std::pair<int, int>> params;
    for (int r = 1; r <= max_sum / 2; ++r)
        for (int l = r; r + l <= max_sum; ++l) params.push_back({r, l});

    std::vector<Papillon> built;
    for (auto [r, l] : params) built.push_back(papillon(r, l));

    for (size_t i = 0; i < params.size(); ++i) {
        auto [r, l] = params[i];
        const Papillon& p = built[i];
        const CubicGraph& g = p.graph;

        add("order", r, l, g.order() == 4 * (r + l) && g.edge_count() == 6 * (r + l));
        add("girth_4", r, l, girth(g) == 4, "girth " + std::to_string(girth(g)));
        OddGirthResult og = odd_girth(g);
        add("odd_girth_2r+3", r, l, !og.bipartite && og.length == 2 * r + 3,
            og.bipartite ? "bipartite" : "odd girth " + std::to_string(og.length));

        bool e2f_ok;
        try {
            e2f_ok = is_e2f(g).e2f;
        } catch (const GraphError&) {
            e2f_ok = false;
        }
        add("e2f", r, l, e2f_ok);

        bool expect_pmh = (r % 2 == 0 && l % 2 == 0);
        PMHResult pmh = is_pmh(g);
        add("pmh_iff_both_even", r, l, pmh.pmh == expect_pmh,
            std::string("pmh=") + (pmh.pmh ? "true" : "false"));

        bool psi_ok = verify_automorphism(g, papillon_swap_automorphism(r, l));
        add("swap_automorphism", r, l, psi_ok);

        bool chain_iso = false, perm_iso = false;
        try {
            CubicGraph via_chains = papillon_from_chains(r, l);
            chain_iso = are_isomorphic(g, via_chains).isomorphic &&
                        canonical_form(g).bytes == canonical_form(via_chains).bytes;
            CubicGraph via_perm = cycle_permutation_graph(papillon_permutation(r, l));
            perm_iso = are_isomorphic(g, via_perm).isomorphic;
        } catch (const GraphError&) {
        }
        add("chain_construction_isomorphic", r, l, chain_iso);
        add("permutation_route_isomorphic", r, l, perm_iso);

        if (r == l) {
            bool lemma_ok = true;
            std::string detail;
            std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
            for (const PerfectMatching& m : pms) {
                try {
                    principal_cut_profile(p, m);
                } catch (const GraphError& e) {
                    lemma_ok = false;
                    detail = e.what();
                    break;
                }
            }
            add("principal_cut_lemma", r, l, lemma_ok, detail);

            if (r % 2 == 0) {
                bool agree = true;
                std::string why;
                for (const PerfectMatching& m : pms) {
                    try {
                        HamExtension built_ext = constructive_pmh_extension(p, m);
                        auto brute = pmh_extension(g, m);
                        if (!brute) {
                            agree = false;
                            why = "brute force found no extension";
                            break;
                        }
                        (void)built_ext;
                    } catch (const GraphError& e) {
                        agree = false;
                        why = e.what();
                        break;
                    }
                }
                add("constructive_matches_bruteforce", r, l, agree, why);
            }
        }
    }

    for (size_t i = 0; i < params.size(); ++i)
        for (size_t k = i + 1; k < params.size(); ++k) {
            if (built[i].graph.order() != built[k].graph.order()) continue;
            bool iso = are_isomorphic(built[i].graph, built[k].graph).isomorphic;
            add("pairwise_non_isomorphic", params[i].first, params[i].second, !iso,
                "vs (" + std::to_string(params[k].first) + "," + std::to_string(params[k].second) + ")");
        }

    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline nlohmann::json theorem_report_to_json(const TheoremReport& rep) {
    nlohmann::json j;
    j["all_pass"] = rep.all_pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const TheoremCheck& c : rep.checks) {
        nlohmann::json e = {{"name", c.name}, {"r", c.r}, {"l", c.l}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["meta"] = {{"elapsed_ms", rep.elapsed_ms}};
    return j;
}

} // namespace cubelab
