// ternvec: command-line front end.
//
// Exit codes: 0 success, 1 no certificate / property false, 2 usage or
// parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternvec/census.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/generate.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/matching.hpp"
#include "ternvec/recognize.hpp"
#include "ternvec/search.hpp"
#include "ternvec/transform.hpp"

using namespace ternvec;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// A graph argument is graph6 text, or @FILE holding graph6 (first line) or an
// edge list.
Graph read_graph(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return parse_graph6(arg);
    const std::string text = slurp(arg.substr(1));
    // Edge-list lines always hold a space; a lone token is graph6.
    const std::string first = trim(text.substr(0, text.find('\n')));
    if (!first.empty() && first[0] != '#' && first.find_first_of(" \t") == std::string::npos) {
        return parse_graph6(first);
    }
    return parse_edge_list(text);
}

// A certificate argument is its JSON record or @FILE holding one.
Certificate read_certificate(const std::string& arg) {
    const std::string text = arg.starts_with('@') ? slurp(arg.substr(1)) : arg;
    return Certificate::from_json(trim(text));
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path, 0);
    out << text;
}

std::string dot_of(const Certificate& c, const std::string& name) {
    return to_dot(c.graph(), c.valuation().values(), name);
}

std::string edges_text(const std::vector<Edge>& edges) {
    std::string out;
    for (const Edge& e : edges) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

// Comma-separated integers, e.g. "9,6,3".
std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ParseError("not an integer list: " + text, 0);
        out.push_back(x);
    }
    return out;
}

struct GraphArg {
    std::string text;
    void add(CLI::App* app) { app->add_option("graph,--graph", text, "graph6 string, or @FILE (graph6 or edge list)")->required(); }
    Graph get() const { return read_graph(text); }
};

// ---- subcommands ----

int run_verify(const std::string& graph, const std::string& valuation) {
    const Graph g = read_graph(graph);
    const Valuation v = Valuation::parse(valuation);
    if (v.size() != g.order()) {
        throw ContractViolation("valuation has " + std::to_string(v.size()) + " entries, graph has " +
                                std::to_string(g.order()) + " vertices");
    }
    const auto lambda = verify(g, v);
    if (!lambda) {
        std::cout << "not an eigenvector\n";
        return kFalse;
    }
    const Certificate c(g, v);
    std::cout << "lambda=" << *lambda << " " << to_string(c.valence()) << "\n" << c.to_json() << "\n";
    return kOk;
}

int run_search(const Graph& g, std::optional<int> lambda, bool oracle, bool stats) {
    SearchResult r;
    if (oracle) {
        r = brute_force(g);
        if (lambda) r = SearchResult(r.with_lambda(*lambda), r.stats());
    } else if (lambda) {
        r = csp_search(g, *lambda);
    } else {
        r = full_spectrum(g);
    }
    for (const Certificate& c : r.certificates()) std::cout << c.to_json() << "\n";
    if (stats) std::cerr << "nodes=" << r.stats().nodes << " prunes=" << r.stats().prunes << "\n";
    return r.empty() ? kFalse : kOk;
}

int run_classify(const Graph& g, bool all, const std::string& dot) {
    const Family fam = classify_family(g);
    std::cout << "family " << fam.to_string() << "\n";
    std::vector<Certificate> certs;
    try {
        const FamilyReport report = recognize(g, {.enumerate_all = all});
        for (const Finding& f : report.found) {
            nlohmann::ordered_json j;
            j["lambda"] = f.lambda;
            j["clause"] = to_string(f.clause);
            j["count"] = f.count;
            j["certificate"] = nlohmann::ordered_json::parse(f.certificate.to_json());
            std::cout << j.dump() << "\n";
            certs.push_back(f.certificate);
        }
    } catch (const Rejected&) {
        // Outside the families: fall back to the general search.
        const SearchResult r = full_spectrum(g);
        const auto counts = r.lambda_counts();
        std::map<int, bool> shown;
        for (const Certificate& c : r.certificates()) {
            if (!all && shown[c.lambda()]) continue;
            shown[c.lambda()] = true;
            nlohmann::ordered_json j;
            j["lambda"] = c.lambda();
            j["clause"] = nullptr;
            j["count"] = all ? 1 : counts.at(c.lambda());
            j["certificate"] = nlohmann::ordered_json::parse(c.to_json());
            std::cout << j.dump() << "\n";
            certs.push_back(c);
        }
    }
    if (certs.empty()) {
        std::cout << "no bivalent/trivalent certificates\n";
        return kFalse;
    }
    if (!dot.empty()) {
        std::string text;
        for (std::size_t i = 0; i < certs.size(); ++i) text += dot_of(certs[i], "lambda" + std::to_string(certs[i].lambda()) + "_" + std::to_string(i));
        write_file(dot, text);
    }
    return kOk;
}

int run_decompose(const Certificate& c) {
    const Decomposition d = decompose(c);
    std::cout << "equal_links " << d.equal_links.size();
    if (!d.equal_links.empty()) std::cout << " " << edges_text(d.equal_links);
    std::cout << "\n";
    for (const Component& comp : d.components) {
        std::cout << comp.cls.to_string() << " size=" << comp.vertices.size()
                  << " lambda=" << (comp.cls.lambda ? std::to_string(*comp.cls.lambda) : std::string("-")) << "\n";
    }
    return kOk;
}

int run_partition(const Graph& g) {
    MatchingPartition p;
    try {
        p = perfect_matching_partition(g);
    } catch (const Rejected& e) {
        std::cout << e.what() << "\n";
        return kFalse;
    }
    for (std::size_t k = 0; k < p.matchings.size(); ++k) std::cout << "M" << k + 1 << " " << edges_text(p.matchings[k]) << "\n";
    return kOk;
}

int run_cyclomatic(std::int64_t max_c, std::int64_t max_order) {
    std::cout << "c,n,d\n";
    for (std::int64_t c = 0; c <= max_c; ++c) {
        const auto w = achievable_c(c, max_order);
        if (w) {
            std::cout << c << "," << w->first << "," << w->second << "\n";
        } else {
            std::cout << c << ",,\n";
        }
    }
    return kOk;
}

struct GenerateArgs {
    std::string family;
    int k = 1;
    int p = 1;
    int q = 0;
    int l = 0;
    std::optional<int> lambda;
    std::string kind = "c4k";
    std::string list;
    std::vector<std::string> glues;
    std::string wiring = "chain";
    std::uint64_t seed = 0;
    std::string dot;
};

Wiring wiring_of(const std::string& s) {
    if (s == "chain") return Wiring::Chain;
    if (s == "star") return Wiring::Star;
    if (s == "random") return Wiring::Random;
    throw ParseError("unknown wiring '" + s + "' (chain, star, random)", 0);
}

int run_generate(const GenerateArgs& a) {
    const WiringSpec wiring{wiring_of(a.wiring), a.seed};
    if (a.family == "counterexample") {
        const Graph g = gen_counterexample();
        std::cout << to_graph6(g) << "\n";
        if (!a.dot.empty()) write_file(a.dot, to_dot(g, std::nullopt, "counterexample"));
        return kOk;
    }
    std::optional<Certificate> c;
    if (a.family == "p2-tree") {
        c = gen_p2_tree(a.p, wiring);
    } else if (a.family == "soft-star") {
        c = gen_soft_star(a.k);
    } else if (a.family == "star-tree") {
        const auto ks = int_list(a.list);
        c = gen_star_tree(ks, wiring);
    } else if (a.family == "cycle") {
        CycleKind kind{};
        if (a.kind == "c4k") kind = CycleKind::C4k;
        else if (a.kind == "c3k") kind = CycleKind::C3k;
        else if (a.kind == "c2k") kind = CycleKind::C2k;
        else throw ParseError("unknown cycle kind '" + a.kind + "' (c4k, c3k, c2k)", 0);
        c = gen_cycle(kind, a.k);
    } else if (a.family == "b1") {
        c = gen_B1(a.p, a.q, a.lambda);
    } else if (a.family == "b3") {
        const auto chains = int_list(a.list);
        c = gen_B3(chains);
    } else if (a.family == "diamond") {
        c = gen_diamond();
    } else if (a.family == "cactus") {
        if (!a.lambda) throw ParseError("cactus needs --lambda", 0);
        const auto lengths = int_list(a.list);
        std::vector<CactusGlue> glues;
        for (const std::string& s : a.glues) {
            std::string spec = s;
            for (char& ch : spec) {
                if (ch == ':') ch = ',';
            }
            const auto xs = int_list(spec);
            if (xs.size() != 3 || xs[0] < 0 || xs[1] < 0 || xs[2] < 0) {
                throw ParseError("glue must be PARENT:PARENT_POS:CHILD_POS, got " + s, 0);
            }
            glues.push_back({static_cast<std::size_t>(xs[0]), static_cast<std::size_t>(xs[1]),
                             static_cast<std::size_t>(xs[2])});
        }
        c = gen_cactus(*a.lambda, lengths, glues);
    } else if (a.family == "regular-bipartite") {
        c = gen_regular_bipartite(a.k, a.l);
    } else {
        throw ParseError("unknown family '" + a.family + "'", 0);
    }
    std::cout << c->to_json() << "\n";
    if (!a.dot.empty()) write_file(a.dot, dot_of(*c, a.family));
    return kOk;
}

struct CensusArgs {
    std::string input;
    std::string enumerate;
    unsigned jobs = 1;
    bool oracle_check = false;
    bool families = false;
    std::string format = "csv";
    bool no_timing = false;
};

int run_census_cmd(const CensusArgs& a) {
    if (!a.input.empty() && !a.enumerate.empty()) throw ParseError("--input and --enumerate are exclusive", 0);
    CensusOptions options;
    options.jobs = a.jobs;
    options.oracle_check = a.oracle_check;
    options.families = a.families;
    options.stop_on_problem = a.families;
    options.log_skip = [](const std::string& why) { std::cerr << "skipped: " << why << "\n"; };
    const bool timing = !a.no_timing;
    const bool csv = a.format == "csv";

    std::ifstream file;
    GraphSource source;
    if (!a.enumerate.empty()) {
        source = enumerator_source(a.enumerate);
    } else if (a.input.empty() || a.input == "-") {
        source = graph6_source(std::cin);
    } else {
        file.open(a.input);
        if (!file) throw ParseError("cannot open " + a.input, 0);
        source = graph6_source(file);
    }

    bool header = false;
    const CensusSummary s = run_census(source, options, [&](const CensusRow& row) {
        if (csv && !header) {
            std::cout << CensusRow::csv_header(timing) << "\n";
            header = true;
        }
        std::cout << (csv ? row.to_csv(timing) : row.to_jsonl(timing)) << "\n";
        if (!row.problems.empty()) {
            std::cerr << "problem in row " << row.index << " (" << row.graph6 << "):\n";
            for (const std::string& p : row.problems) std::cerr << "  " << p << "\n";
        }
        return true;
    });
    std::cout.flush();
    std::cerr << "census: " << s.graphs << " graphs, " << s.problems << " with problems, " << s.skipped
              << " skipped" << (s.stopped ? ", stopped early" : "") << "\n";
    return (s.problems > 0 || s.skipped > 0) ? kFalse : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bivalent and trivalent Laplacian eigenvectors"};
    app.require_subcommand(1);
    int code = kOk;

    std::string v_graph;
    std::string v_val;
    auto* verify_cmd = app.add_subcommand("verify", "Check a valuation against the eigenvector identity");
    verify_cmd->add_option("--graph", v_graph, "graph6 string or @FILE")->required();
    verify_cmd->add_option("--valuation", v_val, "entries over {+,0,-}")->required();

    GraphArg s_graph;
    std::optional<int> s_lambda;
    bool s_oracle = false;
    bool s_stats = false;
    auto* search_cmd = app.add_subcommand("search", "All certificates of a graph");
    s_graph.add(search_cmd);
    search_cmd->add_option("--lambda", s_lambda, "restrict to one eigenvalue");
    search_cmd->add_flag("--oracle", s_oracle, "use exhaustive enumeration");
    search_cmd->add_flag("--stats", s_stats, "print node and prune counts to stderr");

    GraphArg c_graph;
    bool c_all = false;
    std::string c_dot;
    auto* classify_cmd = app.add_subcommand("classify", "Family membership and certified eigenvalues");
    c_graph.add(classify_cmd);
    classify_cmd->add_flag("--all", c_all, "list every certificate, not one per eigenvalue");
    classify_cmd->add_option("--dot", c_dot, "write coloured certificates as DOT");

    GenerateArgs g;
    auto* generate_cmd = app.add_subcommand("generate", "Certified family members");
    generate_cmd->add_option("family", g.family,
                             "p2-tree, soft-star, star-tree, cycle, b1, b3, diamond, cactus, "
                             "regular-bipartite, counterexample")
        ->required();
    generate_cmd->add_option("--k", g.k, "cycle/star/regular-bipartite parameter");
    generate_cmd->add_option("--p", g.p, "first cycle length (b1) or chain count (p2-tree)");
    generate_cmd->add_option("--q", g.q, "second cycle length (b1)");
    generate_cmd->add_option("--l", g.l, "extra matchings (regular-bipartite)");
    generate_cmd->add_option("--lambda", g.lambda, "eigenvalue (b1, cactus)");
    generate_cmd->add_option("--kind", g.kind, "cycle kind: c4k, c3k, c2k");
    generate_cmd->add_option("--list", g.list, "comma-separated sizes (star-tree ks, b3 chains, cactus lengths)");
    generate_cmd->add_option("--glue", g.glues, "cactus glue PARENT:PARENT_POS:CHILD_POS, one per extra block");
    generate_cmd->add_option("--wiring", g.wiring, "chain, star or random");
    generate_cmd->add_option("--seed", g.seed, "seed for random wiring");
    generate_cmd->add_option("--dot", g.dot, "write DOT to this file");

    std::string d_cert;
    std::string d_graph;
    std::string d_val;
    auto* decompose_cmd = app.add_subcommand("decompose", "Components left after deleting equal links");
    decompose_cmd->add_option("certificate", d_cert, "certificate JSON or @FILE");
    decompose_cmd->add_option("--graph", d_graph, "graph6 string or @FILE (with --valuation)");
    decompose_cmd->add_option("--valuation", d_val, "entries over {+,0,-}");

    GraphArg p_graph;
    auto* partition_cmd = app.add_subcommand("partition", "Perfect matchings of a regular bipartite graph");
    p_graph.add(partition_cmd);

    GraphArg h_graph;
    auto* hamiltonian_cmd = app.add_subcommand("hamiltonian", "Exact Hamiltonian cycle test");
    h_graph.add(hamiltonian_cmd);

    std::int64_t y_max_c = 100;
    std::int64_t y_max_order = 200;
    auto* cyclomatic_cmd = app.add_subcommand("cyclomatic", "Realizable cyclomatic numbers of regular bipartite graphs");
    cyclomatic_cmd->add_option("--max-c", y_max_c, "largest c in the table");
    cyclomatic_cmd->add_option("--max-order", y_max_order, "largest order searched");

    CensusArgs ca;
    auto* census_cmd = app.add_subcommand("census", "Certificates over a stream of graphs");
    census_cmd->add_option("--input", ca.input, "graph6 file, one per line ('-' for stdin, the default)");
    census_cmd->add_option("--enumerate", ca.enumerate,
                           "connected:N, trees:N, families:N or random-trees:N:COUNT:SEED");
    census_cmd->add_option("--jobs", ca.jobs, "worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_flag("--oracle-check", ca.oracle_check, "compare with exhaustive enumeration");
    census_cmd->add_flag("--families", ca.families,
                         "keep tree/unicyclic/bicyclic/cactus graphs and check the eigenvalue claims");
    census_cmd->add_option("--format", ca.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    census_cmd->add_flag("--no-timing", ca.no_timing, "omit per-row timings (byte-identical reruns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*verify_cmd) code = run_verify(v_graph, v_val);
        else if (*search_cmd) code = run_search(s_graph.get(), s_lambda, s_oracle, s_stats);
        else if (*classify_cmd) code = run_classify(c_graph.get(), c_all, c_dot);
        else if (*generate_cmd) code = run_generate(g);
        else if (*decompose_cmd) {
            if (!d_cert.empty()) {
                code = run_decompose(read_certificate(d_cert));
            } else if (!d_graph.empty() && !d_val.empty()) {
                const Graph dg = read_graph(d_graph);
                const Valuation dv = Valuation::parse(d_val);
                if (!verify(dg, dv)) {
                    std::cout << "not an eigenvector\n";
                    return kFalse;
                }
                code = run_decompose(Certificate(dg, dv));
            } else {
                std::cerr << "decompose: give a certificate, or --graph with --valuation\n";
                return kUsage;
            }
        } else if (*partition_cmd) code = run_partition(p_graph.get());
        else if (*hamiltonian_cmd) {
            const bool yes = is_hamiltonian(h_graph.get());
            std::cout << (yes ? "hamiltonian" : "not hamiltonian") << "\n";
            code = yes ? kOk : kFalse;
        } else if (*cyclomatic_cmd) code = run_cyclomatic(y_max_c, y_max_order);
        else if (*census_cmd) code = run_census_cmd(ca);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const Rejected& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
