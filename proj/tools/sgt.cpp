// Command-line surface for the exact spectral graph toolkit: analysis,
// construction, verification, and star-set search.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgt/algnum.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/families.hpp"
#include "sgt/graph.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/harness.hpp"
#include "sgt/matching.hpp"
#include "sgt/serialize.hpp"
#include "sgt/spectral.hpp"

namespace {

using namespace sgt;

constexpr int kExitUsage = 2;          // bad input / parse failure
constexpr int kExitNotEigenvalue = 3;  // starset lambda is not an eigenvalue

struct InputOpts {
    std::string graph6;
    std::string graph6_file;
    std::string edge_list_file;
    std::string construct;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    auto* a = cmd->add_option("--graph6", in.graph6, "graph6 string");
    auto* b = cmd->add_option("--graph6-file", in.graph6_file, "file with one graph6 line");
    auto* c = cmd->add_option("--edge-list", in.edge_list_file, "edge-list file ('n m' header)");
    auto* d = cmd->add_option("--construct", in.construct,
                              "named constructor: path:n cycle:n star:n c3aaa:a "
                              "caterpillar:h1,h2,... y6 fig2");
    a->excludes(b)->excludes(c)->excludes(d);
    b->excludes(c)->excludes(d);
    c->excludes(d);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

Graph build_construct(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "path") return path(std::stoi(args));
    if (name == "cycle") return cycle(std::stoi(args));
    if (name == "star") return star(std::stoi(args));
    if (name == "c3aaa") return c3aaa(std::stoi(args));
    if (name == "caterpillar") return caterpillar(parse_int_list(args));
    if (name == "y6") return y6();
    if (name == "fig2") return fig2_graph();
    throw std::invalid_argument("unknown constructor '" + name + "'");
}

Graph load_graph(const InputOpts& in) {
    if (!in.graph6.empty()) return parse_graph6(in.graph6);
    if (!in.graph6_file.empty()) {
        std::ifstream f(in.graph6_file);
        if (!f) throw std::runtime_error("cannot open " + in.graph6_file);
        std::string line;
        if (!std::getline(f, line)) throw std::runtime_error("empty graph6 file");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return parse_graph6(line);
    }
    if (!in.edge_list_file.empty()) {
        std::ifstream f(in.edge_list_file);
        if (!f) throw std::runtime_error("cannot open " + in.edge_list_file);
        return parse_edge_list(f);
    }
    if (!in.construct.empty()) return build_construct(in.construct);
    throw std::invalid_argument("no input graph given (use --graph6/--graph6-file/"
                                "--edge-list/--construct)");
}

std::string edges_text(const std::vector<Edge>& edges) {
    std::string out;
    for (const Edge& e : edges) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    }
    return out.empty() ? "-" : out;
}

// Classifications applicable to (g, lambda), each re-verified before output.
std::vector<std::pair<std::string, Classification>> classifications_for(
    const Graph& g, const AlgNum& lambda, int diam, int bprime, bool tree) {
    std::vector<std::pair<std::string, Classification>> out;
    if (tree && !lambda.is_zero()) {
        Classification c = classify_thm12(g, lambda);
        if (c.extremal()) out.emplace_back("tree-multiplicity-one-below-beta-prime", c);
    }
    if (!tree && diam >= 4 && bprime >= 3 && !lambda.is_zero()) {
        Classification c = classify_thm32(g, lambda);
        if (c.extremal()) out.emplace_back("hub-decomposition", c);
    }
    if (bprime >= 3 && !lambda.is_zero()) {
        Classification c = classify_thm33(g, lambda);
        if (c.extremal()) out.emplace_back("star-hub", c);
    }
    return out;
}

Json analyze_component(const Graph& g) {
    Json j;
    j["graph6"] = emit_graph6(g);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["cyclomatic"] = cyclomatic_number(g);
    const bool conn = is_connected(g);
    j["connected"] = conn;
    if (conn) j["diameter"] = diameter(g);
    MatchingResult b = matching_number(g);
    MatchingResult bp = induced_matching_number(g);
    if (!is_matching(g, b.witness) || !is_induced_matching(g, bp.witness))
        throw std::logic_error("internal witness verification failed");
    j["beta"] = matching_to_json(b);
    j["beta_prime"] = matching_to_json(bp);
    SpectrumSummary sp = spectrum(g);
    j["spectrum"] = spectrum_to_json(sp);
    if (conn) {
        Classification eq = classify_thm31_equality(g);
        j["multiplicity_bound_equality_class"] = classification_to_json(eq);
        const bool tree = is_tree(g);
        const int diam = diameter(g);
        Json per_lambda = Json::array();
        for (const SpectrumEntry& e : sp) {
            auto cls = classifications_for(g, e.value, diam, bp.size, tree);
            if (cls.empty()) continue;
            for (auto& [kind, c] : cls) {
                Json entry;
                entry["lambda"] = algnum_to_json(e.value);
                entry["mult"] = e.mult;
                entry["kind"] = kind;
                entry["classification"] = classification_to_json(c);
                per_lambda.push_back(std::move(entry));
            }
        }
        j["eigenvalue_classifications"] = std::move(per_lambda);
    }
    return j;
}

void print_analysis_text(const Json& j, std::ostream& os, const std::string& indent = "") {
    os << indent << "graph6:    " << j["graph6"].get<std::string>() << "\n";
    os << indent << "n, m, c:   " << j["n"] << ", " << j["m"] << ", " << j["cyclomatic"] << "\n";
    if (j.contains("diameter")) os << indent << "diameter:  " << j["diameter"] << "\n";
    os << indent << "spectrum: ";
    for (const Json& e : j["spectrum"]) {
        double approx = e["value"]["approx"].get<double>();
        os << "  " << (e["value"]["lo"] == e["value"]["hi"]
                           ? e["value"]["lo"].get<std::string>()
                           : "~" + std::to_string(approx))
           << "^" << e["mult"].get<int>();
    }
    os << "\n";
    os << indent << "beta:      " << j["beta"]["size"] << "\n";
    os << indent << "beta':     " << j["beta_prime"]["size"] << "\n";
    if (j.contains("multiplicity_bound_equality_class"))
        os << indent << "equality class: "
           << j["multiplicity_bound_equality_class"]["tag"].get<std::string>() << "\n";
    if (j.contains("eigenvalue_classifications"))
        for (const Json& e : j["eigenvalue_classifications"])
            os << indent << "classification at ~" << e["lambda"]["approx"].get<double>() << " (m="
               << e["mult"].get<int>() << "): " << e["kind"].get<std::string>() << " / "
               << e["classification"]["tag"].get<std::string>() << "\n";
}

int cmd_analyze(const InputOpts& in, const std::string& format) {
    Graph g = load_graph(in);
    Json j = analyze_component(g);
    if (!is_connected(g)) {
        Json comps = Json::array();
        ComponentSplit split = connected_components(g);
        for (const InducedSubgraph& part : split.nontrivial)
            comps.push_back(analyze_component(part.graph));
        for (std::uint64_t m = split.isolated; m; m &= m - 1)
            comps.push_back(analyze_component(Graph::empty(1)));
        j["components"] = std::move(comps);
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        print_analysis_text(j, std::cout);
        if (j.contains("components")) {
            int idx = 0;
            for (const Json& comp : j["components"]) {
                std::cout << "component " << idx++ << ":\n";
                print_analysis_text(comp, std::cout, "  ");
            }
        }
    }
    return 0;
}

int cmd_construct(const std::string& spec, const std::string& format, bool edges) {
    Graph g = build_construct(spec);
    if (format == "json") {
        Json j;
        j["graph6"] = emit_graph6(g);
        j["n"] = g.order();
        j["edges"] = edges_to_json(g.edges());
        std::cout << j.dump(2) << "\n";
    } else if (edges) {
        std::cout << emit_edge_list(g);
    } else {
        std::cout << emit_graph6(g) << "\n";
    }
    return 0;
}

int cmd_starset(const InputOpts& in, const std::string& lambda_spec, const std::string& format) {
    Graph g = load_graph(in);
    AlgNum lambda = parse_eigenvalue_spec(lambda_spec);
    if (!is_eigenvalue(g, lambda)) {
        std::cerr << "error: " << lambda.to_string() << " is not an eigenvalue of the input graph\n";
        return kExitNotEigenvalue;
    }
    StarSet s = find_star_set(g, lambda);
    std::vector<int> verts;
    for (std::uint64_t m = s.vertices; m; m &= m - 1) verts.push_back(popcount64((m & -m) - 1));
    if (format == "json") {
        Json j;
        j["graph6"] = emit_graph6(g);
        j["lambda"] = algnum_to_json(lambda);
        j["multiplicity"] = multiplicity(g, lambda);
        j["star_set"] = verts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "star set (" << verts.size() << " vertices):";
        for (int v : verts) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_enumerate(int n, bool trees, const std::string& format) {
    const std::vector<Graph> pool = trees ? enumerate_trees(n) : enumerate_connected_graphs(n);
    if (format == "json") {
        Json arr = Json::array();
        for (const Graph& g : pool) arr.push_back(emit_graph6(g));
        Json j;
        j["n"] = n;
        j["family"] = trees ? "trees" : "connected";
        j["count"] = pool.size();
        j["graphs"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Graph& g : pool) std::cout << emit_graph6(g) << "\n";
    }
    return 0;
}

int cmd_verify(const SuiteConfig& cfg, const std::string& format, const std::string& output) {
    SuiteReport rep = run_suite(cfg);
    std::string body;
    if (format == "csv") {
        body = rep.to_csv();
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto& [id, st] : rep.stats)
            os << id << ": scanned=" << st.graphs_scanned << " eigenvalues="
               << st.eigenvalues_scanned << " passes=" << st.passes << " violations="
               << st.violations << " skipped=" << st.skipped << " notes=" << st.notes << "\n";
        for (const Finding& f : rep.findings)
            os << severity_name(f.severity) << " [" << f.check << "] " << f.graph6
               << (f.eigenvalue.empty() ? "" : " at " + f.eigenvalue) << "\n  expected: "
               << f.expected << "\n  observed: " << f.observed << "\n";
        os << "total violations: " << rep.total_violations() << "\n";
        body = os.str();
    } else {
        body = rep.to_json() + "\n";
    }
    if (output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << body;
        std::cout << "report written to " << output << " (" << rep.total_violations()
                  << " violations)\n";
    }
    return rep.total_violations() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral graph toolkit: eigenvalue multiplicities, induced matchings "
                 "and extremal-structure verification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    InputOpts in;
    std::string lambda_spec, construct_spec, output;
    int enum_n = 5;
    bool enum_trees = false;
    SuiteConfig cfg;
    std::string checks_csv;

    CLI::App* analyze = app.add_subcommand("analyze", "spectrum, matchings and classifications");
    add_input_flags(analyze, in);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--max-n", cfg.max_n, "connected-graph sweep bound");
    verify->add_option("--trees-max-n", cfg.trees_max_n, "tree sweep bound");
    verify->add_option("--trials", cfg.lemma22_trials, "random bridge-composite trials");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--workers", cfg.workers, "worker thread count");
    verify->add_option("--checks", checks_csv, "comma-separated check ids (default: all)");
    verify->add_option("--graph6-file", cfg.graph6_file,
                       "external graph6 corpus for the connected sweep");
    verify->add_option("--output", output, "write the report to a file");

    CLI::App* construct = app.add_subcommand("construct", "emit a named graph");
    construct->add_option("name", construct_spec, "constructor, e.g. c3aaa:2")->required();
    bool construct_edges = false;
    construct->add_flag("--edges", construct_edges, "emit an edge list instead of graph6");

    CLI::App* starset = app.add_subcommand("starset", "find a star set for an eigenvalue");
    add_input_flags(starset, in);
    starset->add_option("--lambda", lambda_spec,
                        "eigenvalue: 'p/q' or 'poly:c0,c1,...;interval:lo,hi'")
        ->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list isomorphism classes as graph6");
    enumerate->add_option("-n,--order", enum_n, "number of vertices")->required();
    enumerate->add_flag("--trees", enum_trees, "trees only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(in, format);
        if (*verify) {
            if (!checks_csv.empty()) {
                std::stringstream ss(checks_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.checks.push_back(tok);
            }
            return cmd_verify(cfg, format, output);
        }
        if (*construct) return cmd_construct(construct_spec, format, construct_edges);
        if (*starset) return cmd_starset(in, lambda_spec, format);
        if (*enumerate) return cmd_enumerate(enum_n, enum_trees, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
