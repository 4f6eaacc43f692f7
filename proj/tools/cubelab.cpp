#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubelab/census.hpp"
#include "cubelab/cubic_graph.hpp"
#include "cubelab/generators.hpp"
#include "cubelab/graph_io.hpp"
#include "cubelab/iso.hpp"
#include "cubelab/matchings.hpp"
#include "cubelab/multipole.hpp"
#include "cubelab/permutation.hpp"

using namespace cubelab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

void emit_graph(const CubicGraph& g, const std::string& format) {
    if (format == "graph6")
        std::cout << graph6_encode(g) << "\n";
    else if (format == "edges")
        std::cout << edges_encode(g);
    else if (format == "json")
        std::cout << graph_to_json(g).dump(2) << "\n";
    else
        throw GraphError(Err::ParseError, "unknown format " + format);
}

CubicGraph load_g6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(Err::ParseError, "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return read_graph6_line(line);
    }
    throw GraphError(Err::ParseError, "no graph6 line in " + path);
}

json matching_json(const CubicGraph& g, const PerfectMatching& m, const PapillonLayout* layout) {
    json arr = json::array();
    for (int e : m.edges) {
        auto [u, v] = g.edge(e);
        if (layout)
            arr.push_back({{"edge", {u, v}}, {"label", layout->edge_label(g, e)}});
        else
            arr.push_back({u, v});
    }
    return arr;
}

struct CheckTarget {
    CubicGraph graph;
    std::optional<PapillonLayout> layout;
    std::string description;
};

CheckTarget resolve_target(const std::string& g6_path, const std::string& papillon_arg,
                           const std::string& named) {
    int sources = !g6_path.empty() + !papillon_arg.empty() + !named.empty();
    if (sources != 1) throw GraphError(Err::ParseError, "need exactly one of --g6, --papillon, --named");
    if (!g6_path.empty()) return {load_g6_file(g6_path), std::nullopt, g6_path};
    if (!named.empty()) return {named_graph(named), std::nullopt, named};
    auto comma = papillon_arg.find(',');
    if (comma == std::string::npos) throw GraphError(Err::ParseError, "--papillon expects R,L");
    int r = std::stoi(papillon_arg.substr(0, comma));
    int l = std::stoi(papillon_arg.substr(comma + 1));
    Papillon p = papillon(r, l);
    return {std::move(p.graph), std::move(p.layout),
            "papillon(" + std::to_string(r) + "," + std::to_string(l) + ")"};
}

int run_check(const std::string& property, const CheckTarget& target, const std::string& json_out) {
    const CubicGraph& g = target.graph;
    const PapillonLayout* layout = target.layout ? &*target.layout : nullptr;
    json out;
    out["property"] = property;
    out["graph"] = {{"g6", graph6_encode(g)}, {"order", g.order()}, {"source", target.description}};
    bool holds = false;

    if (property == "e2f") {
        E2FResult res = is_e2f(g);
        holds = res.e2f;
        if (res.e2f) {
            json certs = json::array();
            for (const E2FCertificate& c : res.certificates)
                certs.push_back({{"pm", matching_json(g, c.pm, layout)}, {"colouring", c.colouring.colour}});
            out["certificates"] = certs;
        } else {
            out["witness"] = {{"pm", matching_json(g, *res.witness, layout)},
                              {"odd_cycle", res.odd_cycle->vertices}};
        }
    } else if (property == "pmh") {
        PMHResult res = is_pmh(g);
        holds = res.pmh;
        if (res.pmh) {
            json certs = json::array();
            for (const PMHCertificate& c : res.certificates)
                certs.push_back({{"pm", matching_json(g, c.pm, layout)},
                                 {"second", matching_json(g, c.second, layout)},
                                 {"cycle", c.cycle.vertices}});
            out["certificates"] = certs;
        } else {
            out["witness"] = {{"pm", matching_json(g, *res.witness, layout)}};
        }
    } else if (property == "ph") {
        PHResult res = is_ph(g);
        holds = res.ph;
        if (!res.ph) {
            json pairing = json::array();
            for (auto [u, v] : res.witness_pairing) pairing.push_back({u, v});
            out["witness"] = {{"pairing", pairing}};
        }
    } else if (property == "2fh") {
        holds = is_two_factor_hamiltonian(g);
    } else {
        throw GraphError(Err::ParseError, "unknown property " + property);
    }

    out["holds"] = holds;
    std::string text = out.dump(2);
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) throw GraphError(Err::ParseError, "cannot write " + json_out);
        f << text << "\n";
        std::cout << property << " " << target.description << ": " << (holds ? "holds" : "fails") << "\n";
    } else {
        std::cout << text << "\n";
    }
    return holds ? kExitOk : kExitCounterexample;
}

void write_report(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw GraphError(Err::ParseError, "cannot write " + path);
    f << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic graph toolkit: papillon generators, E2F/PMH/PH checkers and censuses"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "construct graphs");
    gen->require_subcommand(1);
    std::string format = "graph6";

    auto* gen_pap = gen->add_subcommand("papillon", "papillon graph P_{r,l}");
    int opt_r = 1, opt_l = 1;
    bool via_chains = false;
    gen_pap->add_option("--r", opt_r, "right chain length")->required();
    gen_pap->add_option("--l", opt_l, "left chain length")->required();
    gen_pap->add_flag("--via-chains", via_chains, "assemble from C4-pole chains instead of the direct definition");
    gen_pap->add_option("--format", format, "graph6|edges|json");

    auto* gen_cpg = gen->add_subcommand("cpg", "cycle permutation graph");
    std::string perm_text;
    int opt_t = 0;
    gen_cpg->add_option("--perm", perm_text, "permutation in cycle notation, e.g. \"(1 2)(3 4)\"")->required();
    gen_cpg->add_option("--t", opt_t, "number of symbols")->required();
    gen_cpg->add_option("--format", format, "graph6|edges|json");

    auto* gen_named = gen->add_subcommand("named", "reference graph");
    std::string name;
    gen_named->add_option("--name", name, "k4|k33|q3|petersen|prism6")->required();
    gen_named->add_option("--format", format, "graph6|edges|json");

    // ---- check ----
    auto* check = app.add_subcommand("check", "property checks with certificates");
    std::string check_property, check_g6, check_papillon, check_named, check_json_out;
    check->add_option("property", check_property, "e2f|pmh|ph|2fh")->required();
    check->add_option("--g6", check_g6, "graph6 file");
    check->add_option("--papillon", check_papillon, "R,L");
    check->add_option("--named", check_named, "named graph");
    check->add_option("--json-out", check_json_out, "write the JSON certificate here");

    // ---- census ----
    auto* census = app.add_subcommand("census", "exhaustive censuses");
    census->require_subcommand(1);
    auto* census_perm = census->add_subcommand("perm", "all cycle permutation graphs on 2t vertices");
    int census_t = 0;
    bool allow_odd = false;
    std::string census_out, census_in;
    int census_threads = 0;
    bool no_certs = false;
    census_perm->add_option("--t", census_t, "symbols per cycle")->required();
    census_perm->add_flag("--allow-odd", allow_odd, "verify that odd t yields no E2F survivor");
    census_perm->add_option("--out", census_out, "report path (stdout otherwise)");
    census_perm->add_option("--threads", census_threads, "worker threads (default: CUBELAB_THREADS or auto)");
    census_perm->add_flag("--no-certificates", no_certs, "omit per-matching certificates from the report");

    auto* census_g6 = census->add_subcommand("g6", "classify a graph6 corpus");
    census_g6->add_option("--in", census_in, "graph6 file, one graph per line")->required();
    census_g6->add_option("--out", census_out, "report path (stdout otherwise)");
    census_g6->add_option("--threads", census_threads, "worker threads");
    census_g6->add_flag("--no-certificates", no_certs, "omit per-matching certificates from the report");

    // ---- theorems ----
    auto* theorems = app.add_subcommand("theorems", "papillon family checks up to r+l <= max-sum");
    int max_sum = 6;
    std::string theorems_out;
    theorems->add_option("--max-sum", max_sum, "bound on r+l");
    theorems->add_option("--out", theorems_out, "report path (stdout otherwise)");

    // ---- iso ----
    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two graph6 files");
    std::string iso_a, iso_b;
    iso_cmd->add_option("a", iso_a, "first graph6 file")->required();
    iso_cmd->add_option("b", iso_b, "second graph6 file")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "re-validate the certificates of a census report");
    std::string verify_path;
    verify->add_option("--report", verify_path, "report JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_pap->parsed()) {
            emit_graph(via_chains ? papillon_from_chains(opt_r, opt_l) : papillon(opt_r, opt_l).graph, format);
            return kExitOk;
        }
        if (gen_cpg->parsed()) {
            emit_graph(cycle_permutation_graph(Permutation::parse_cycles(perm_text, opt_t)), format);
            return kExitOk;
        }
        if (gen_named->parsed()) {
            emit_graph(named_graph(name), format);
            return kExitOk;
        }
        if (check->parsed()) {
            return run_check(check_property, resolve_target(check_g6, check_papillon, check_named),
                             check_json_out);
        }
        if (census_perm->parsed()) {
            CensusOptions opts;
            opts.threads = census_threads;
            opts.allow_odd = allow_odd;
            opts.with_certificates = !no_certs;
            CensusReport rep = census_cycle_permutation(census_t, opts);
            write_report(report_to_json(rep), census_out);
            if (census_t % 2 != 0 && !rep.odd_t_all_non_e2f) {
                std::cerr << "odd t census found an E2F survivor\n";
                return kExitCounterexample;
            }
            return kExitOk;
        }
        if (census_g6->parsed()) {
            CensusOptions opts;
            opts.threads = census_threads;
            opts.with_certificates = !no_certs;
            CensusReport rep = census_graph6_file(census_in, opts);
            write_report(report_to_json(rep), census_out);
            return kExitOk;
        }
        if (theorems->parsed()) {
            TheoremReport rep = theorem_suite(max_sum);
            write_report(theorem_report_to_json(rep), theorems_out);
            for (const TheoremCheck& c : rep.checks)
                if (!c.pass)
                    std::cerr << "FAIL " << c.name << " r=" << c.r << " l=" << c.l << " " << c.detail << "\n";
            return rep.all_pass() ? kExitOk : kExitCounterexample;
        }
        if (iso_cmd->parsed()) {
            CubicGraph a = load_g6_file(iso_a);
            CubicGraph b = load_g6_file(iso_b);
            IsoResult res = are_isomorphic(a, b);
            json out;
            out["isomorphic"] = res.isomorphic;
            if (res.isomorphic) out["mapping"] = res.mapping;
            std::cout << out.dump(2) << "\n";
            return res.isomorphic ? kExitOk : kExitCounterexample;
        }
        if (verify->parsed()) {
            std::ifstream in(verify_path);
            if (!in) throw GraphError(Err::ParseError, "cannot open " + verify_path);
            json j;
            in >> j;
            VerifyOutcome out = verify_report(j);
            if (out.ok) {
                std::cout << "all certificates verified\n";
                return kExitOk;
            }
            for (const std::string& p : out.problems) std::cerr << p << "\n";
            return kExitCounterexample;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
