#include "eckit/canonical.hpp"
#include "eckit/coalition.hpp"
#include "eckit/domination.hpp"
#include "eckit/enumerate.hpp"
#include "eckit/graph.hpp"
#include "eckit/solver.hpp"
#include "eckit/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int env_threads() {
    const char* s = std::getenv("EC_KIT_THREADS");
    if (!s) return 1;
    int v = std::atoi(s);
    return v >= 1 ? v : 1;
}

std::string first_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b != std::string::npos) {
            size_t e = line.find_last_not_of(" \t\r\n");
            return line.substr(b, e - b + 1);
        }
    }
    throw eckit::MalformedGraph6("no graph6 line in input");
}

// Inline edge list of the form "n: u-v,u-v,...".
eckit::Graph parse_edges_arg(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw eckit::MalformedGraph6("--edges expects 'n: u-v,u-v,...'");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(s.substr(0, colon), &used);
    } catch (const std::exception&) {
        throw eckit::MalformedGraph6("--edges: bad vertex count");
    }
    std::vector<std::pair<int, int>> es;
    std::string rest = s.substr(colon + 1);
    std::istringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        tok = tok.substr(b, e - b + 1);
        size_t dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
            throw eckit::MalformedGraph6("--edges: bad pair '" + tok + "'");
        try {
            es.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            throw eckit::MalformedGraph6("--edges: bad pair '" + tok + "'");
        }
    }
    return eckit::make_graph(n, es);
}

// Exactly one of the three sources must be present.
eckit::Graph load_graph(const std::string& family, const std::string& edges,
                        const std::string& file) {
    int sources = (!family.empty()) + (!edges.empty()) + (!file.empty());
    if (sources != 1)
        throw eckit::MalformedGraph6(
            "give exactly one input: --family, --edges, or a graph6 file (- for stdin)");
    if (!family.empty()) return eckit::family_from_spec(family);
    if (!edges.empty()) return parse_edges_arg(edges);
    if (file == "-") return eckit::parse_graph6(first_line(std::cin));
    std::ifstream in(file);
    if (!in) throw eckit::MalformedGraph6("cannot open " + file);
    return eckit::parse_graph6(first_line(in));
}

// One class per line: whitespace separated 0-based edge indices. Blank
// lines and lines starting with # are skipped.
eckit::EdgePartition load_partition(const std::string& path, int m) {
    std::ifstream in(path);
    if (!in) throw eckit::MalformedGraph6("cannot open " + path);
    eckit::EdgePartition p;
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos || line[b] == '#') continue;
        std::istringstream ss(line);
        std::vector<int> idx;
        std::string tok;
        while (ss >> tok) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                idx.push_back(v);
            } catch (const std::exception&) {
                throw eckit::MalformedGraph6("partition file: bad edge index '" + tok + "'");
            }
        }
        if (idx.empty()) continue;
        for (int v : idx)
            if (v < 0 || v >= m)
                throw eckit::EdgeOutOfRange("partition file: edge " + std::to_string(v) +
                                            " out of range");
        p.push_back(eckit::EdgeSet::of(m, idx));
    }
    return p;
}

std::string class_text(const eckit::Graph& g, const eckit::EdgeSet& c) {
    std::ostringstream os;
    bool first = true;
    for (int i : c.indices()) {
        auto [u, v] = g.edge(i);
        if (!first) os << " ";
        first = false;
        os << i << "(" << u << "-" << v << ")";
    }
    return os.str();
}

struct GraphOpts {
    std::string family;
    std::string edges;
    std::string file;
    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "family spec: path:N, cycle:N, complete:N, kb:R,S, star:N, dstar:P,Q");
        cmd->add_option("--edges", edges, "inline edge list 'n: u-v,u-v,...'");
        cmd->add_option("input", file, "file with a graph6 line, or - for stdin");
    }
};

struct SolveOpts {
    long long budget_ms = 0;
    unsigned long long nodes = 0;
    int max_edges = 22;
    int threads = env_threads();
    bool permissive = false;
    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-ms", budget_ms, "wall clock budget, 0 = unlimited");
        cmd->add_option("--nodes", nodes, "search node budget, 0 = unlimited");
        cmd->add_option("--max-edges", max_edges, "hard edge count cap for exact search");
        cmd->add_option("--threads", threads, "worker threads (env EC_KIT_THREADS)");
        cmd->add_flag("--permissive", permissive, "accept dominating classes of any size");
    }
    eckit::SolverConfig config() const {
        eckit::SolverConfig cfg;
        cfg.time_budget = std::chrono::milliseconds(budget_ms);
        cfg.node_budget = nodes;
        cfg.max_edges = max_edges;
        cfg.threads = threads;
        cfg.permissive = permissive;
        return cfg;
    }
};

nlohmann::ordered_json partition_json(const eckit::EdgePartition& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const eckit::EdgeSet& c : p) arr.push_back(c.indices());
    return arr;
}

int run_ec(const GraphOpts& gopts, const SolveOpts& sopts, bool json, bool trace) {
    eckit::Graph g = load_graph(gopts.family, gopts.edges, gopts.file);
    int lo = 0, hi = 0;
    eckit::EdgePartition cert;
    std::vector<std::pair<std::string, int>> bounds;
    bool exact = true;
    try {
        eckit::EcResult res = eckit::ec_exact(g, sopts.config());
        lo = hi = res.value;
        cert = res.certificate;
        bounds = res.bound_trace;
    } catch (const eckit::TimeBudgetExceeded& e) {
        lo = e.lo;
        hi = e.hi;
        cert = e.best;
        exact = false;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["ec_lo"] = lo;
        j["ec_hi"] = hi;
        j["certificate"] = partition_json(cert);
        if (trace) {
            auto t = nlohmann::ordered_json::array();
            for (const auto& [name, value] : bounds) t.push_back({{"bound", name}, {"value", value}});
            j["trace"] = t;
        }
        std::cout << j.dump() << "\n";
    } else {
        if (exact)
            std::cout << "EC = " << lo << "\n";
        else
            std::cout << "EC in [" << lo << ", " << hi << "] (budget exhausted)\n";
        for (size_t i = 0; i < cert.size(); ++i)
            std::cout << "class " << i << ": " << class_text(g, cert[i]) << "\n";
        if (trace)
            for (const auto& [name, value] : bounds)
                std::cout << "bound " << name << " = " << value << "\n";
    }
    return exact ? kExitOk : kExitFail;
}

int run_certify(const GraphOpts& gopts, const std::string& partition_path, bool permissive,
                bool json) {
    eckit::Graph g = load_graph(gopts.family, gopts.edges, gopts.file);
    eckit::EdgePartition p = load_partition(partition_path, g.m());
    eckit::PartitionVerdict v;
    try {
        v = eckit::validate_partition(g, p, permissive);
    } catch (const eckit::GraphError& e) {
        // Not a partition of the edge set at all: a usage level defect.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto status_text = [](eckit::ClassStatus s) {
        switch (s) {
        case eckit::ClassStatus::SingletonDominating: return "singleton-dominating";
        case eckit::ClassStatus::Partnered: return "partnered";
        case eckit::ClassStatus::Dominating: return "dominating";
        default: return "orphan";
        }
    };
    if (json) {
        nlohmann::ordered_json j;
        j["valid"] = v.is_ec;
        j["order"] = p.size();
        auto arr = nlohmann::ordered_json::array();
        for (size_t i = 0; i < p.size(); ++i) {
            nlohmann::ordered_json c;
            c["edges"] = p[i].indices();
            c["status"] = status_text(v.status[i]);
            c["partners"] = v.partners[i];
            arr.push_back(std::move(c));
        }
        j["classes"] = std::move(arr);
        std::cout << j.dump() << "\n";
    } else {
        for (size_t i = 0; i < p.size(); ++i) {
            std::cout << "class " << i << ": " << class_text(g, p[i]) << " -> "
                      << status_text(v.status[i]);
            if (!v.partners[i].empty()) {
                std::cout << " (partners:";
                for (int j : v.partners[i]) std::cout << " " << j;
                std::cout << ")";
            }
            std::cout << "\n";
        }
        if (v.is_ec) {
            std::cout << "valid ec-partition of order " << p.size() << "\n";
        } else {
            for (size_t i = 0; i < v.status.size(); ++i)
                if (v.status[i] == eckit::ClassStatus::Orphan ||
                    (!permissive && v.status[i] == eckit::ClassStatus::Dominating)) {
                    std::cout << "invalid: class " << i << " has no role\n";
                    break;
                }
        }
    }
    return v.is_ec ? kExitOk : kExitFail;
}

int run_ecg(const GraphOpts& gopts, const std::string& partition_path, bool as_graph6) {
    eckit::Graph g = load_graph(gopts.family, gopts.edges, gopts.file);
    eckit::EdgePartition p =
        partition_path.empty() ? eckit::singleton_partition(g) : load_partition(partition_path, g.m());
    eckit::Graph ecg = eckit::build_ecg(g, p);
    if (as_graph6)
        std::cout << eckit::write_graph6(ecg) << "\n";
    else
        std::cout << eckit::write_dot(ecg);
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& graphs_path, const std::string& out,
               const SolveOpts& sopts) {
    bool ok = true;
    bool ran = false;
    if (suite == "family" || suite == "all") {
        eckit::FamilyReport rep = eckit::run_family_suite(sopts.config());
        std::cout << eckit::report_text(&rep, nullptr, nullptr);
        if (!out.empty() && suite == "family") {
            std::ofstream f(out);
            f << eckit::family_suite_csv(rep);
        }
        ok = ok && rep.all_pass;
        ran = true;
    }
    if (suite == "ecg" || suite == "all") {
        eckit::EcgCatalogReport rep = eckit::verify_ecg_catalog();
        std::cout << eckit::report_text(nullptr, nullptr, &rep);
        ok = ok && rep.required_pass;
        ran = true;
    }
    if ((suite == "sweep" || suite == "all") && !graphs_path.empty()) {
        std::ifstream in(graphs_path);
        if (!in) throw eckit::MalformedGraph6("cannot open " + graphs_path);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) lines.push_back(line);
        eckit::SweepConfig cfg;
        cfg.solver = sopts.config();
        cfg.threads = sopts.threads;
        cfg.solver.threads = 1; // graphs are the parallel work items
        cfg.out_path = out;
        auto checks = eckit::default_checks();
        std::vector<eckit::SweepRecord> records = eckit::sweep(lines, checks, cfg);
        std::cout << eckit::report_text(nullptr, &records, nullptr);
        auto tally = eckit::tally_checks(records);
        for (const auto& c : checks)
            if (c.severity == eckit::CheckDefinition::Severity::Assert && tally[c.name].fail > 0)
                ok = false;
        ran = true;
    } else if (suite == "sweep") {
        throw eckit::MalformedGraph6("--suite sweep needs --graphs FILE");
    }
    if (!ran) throw eckit::MalformedGraph6("unknown suite '" + suite + "'");
    return ok ? kExitOk : kExitFail;
}

int run_gen(const std::string& family, int all_n, int upto_n, int connected_n, int trees_n,
            int unicyclic_n) {
    int modes = (!family.empty()) + (all_n > 0) + (upto_n > 0) + (connected_n > 0) +
                (trees_n > 0) + (unicyclic_n > 0);
    if (modes != 1)
        throw eckit::MalformedGraph6(
            "give exactly one of --family, --all, --all-upto, --connected, --trees, --unicyclic");
    auto dump = [](const std::vector<eckit::Graph>& gs) {
        for (const eckit::Graph& g : gs) std::cout << eckit::write_graph6(g) << "\n";
    };
    if (!family.empty())
        std::cout << eckit::write_graph6(eckit::family_from_spec(family)) << "\n";
    else if (all_n > 0)
        dump(eckit::all_graphs(all_n));
    else if (upto_n > 0)
        for (int n = 1; n <= upto_n; ++n) dump(eckit::all_graphs(n));
    else if (connected_n > 0)
        dump(eckit::connected_graphs(connected_n));
    else if (trees_n > 0)
        dump(eckit::trees(trees_n));
    else
        dump(eckit::unicyclic_graphs(unicyclic_n));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge coalition partitions: exact values, certificates, coalition graphs"};
    app.require_subcommand(1);

    GraphOpts ec_graph, certify_graph, ecg_graph;
    SolveOpts ec_solve, verify_solve;
    bool ec_json = false, ec_trace = false;
    CLI::App* ec = app.add_subcommand("ec", "compute the edge coalition number");
    ec_graph.attach(ec);
    ec_solve.attach(ec);
    ec->add_flag("--json", ec_json, "machine readable output");
    ec->add_flag("--trace", ec_trace, "show the bound trace");

    std::string certify_partition;
    bool certify_permissive = false, certify_json = false;
    CLI::App* certify = app.add_subcommand("certify", "validate a partition as an ec-partition");
    certify_graph.attach(certify);
    certify->add_option("--partition", certify_partition, "file, one class of edge indices per line")
        ->required();
    certify->add_flag("--permissive", certify_permissive, "accept dominating classes of any size");
    certify->add_flag("--json", certify_json, "machine readable output");

    std::string ecg_partition;
    bool ecg_graph6 = false, ecg_dot = false;
    CLI::App* ecg = app.add_subcommand("ecg", "build the coalition graph of a partition");
    ecg_graph.attach(ecg);
    ecg->add_option("--partition", ecg_partition, "partition file; default all singletons");
    ecg->add_flag("--graph6", ecg_graph6, "emit graph6 instead of dot");
    ecg->add_flag("--dot", ecg_dot, "emit dot (default)");

    std::string verify_suite = "all", verify_graphs, verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run the claim suites");
    verify->add_option("--suite", verify_suite, "family | sweep | ecg | all");
    verify->add_option("--graphs", verify_graphs, "graph6 file for the sweep");
    verify->add_option("--out", verify_out, "family: csv path; sweep: jsonl path (resumable)");
    verify_solve.attach(verify);

    std::string gen_family;
    int gen_all = 0, gen_upto = 0, gen_connected = 0, gen_trees = 0, gen_unicyclic = 0;
    CLI::App* gen = app.add_subcommand("gen", "emit graph6 lines");
    gen->add_option("--family", gen_family, "one family graph");
    gen->add_option("--all", gen_all, "all graphs of this order");
    gen->add_option("--all-upto", gen_upto, "all graphs of orders 1..N");
    gen->add_option("--connected", gen_connected, "connected graphs of this order");
    gen->add_option("--trees", gen_trees, "trees of this order");
    gen->add_option("--unicyclic", gen_unicyclic, "unicyclic graphs of this order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ec) return run_ec(ec_graph, ec_solve, ec_json, ec_trace);
        if (*certify)
            return run_certify(certify_graph, certify_partition, certify_permissive, certify_json);
        if (*ecg) return run_ecg(ecg_graph, ecg_partition, ecg_graph6);
        if (*verify) return run_verify(verify_suite, verify_graphs, verify_out, verify_solve);
        if (*gen)
            return run_gen(gen_family, gen_all, gen_upto, gen_connected, gen_trees, gen_unicyclic);
    } catch (const eckit::MalformedGraph6& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::VertexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::EdgeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::InvalidFamilyParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::DuplicateEdge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::SelfLoop& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eckit::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
