// Command-line front end: exact distance Laplacian spectra, invariant
// reports, exhaustive verification sweeps, and equality-case mining over
// graph6 input or the built-in families.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dlspectra/records.hpp"

namespace {

using namespace dlspectra;

Graph graph_from_family(const std::string& name, const std::vector<int>& args) {
    auto need = [&](std::size_t k, const char* usage) {
        if (args.size() != k)
            throw CLI::ValidationError("--family " + name + " expects " + usage);
    };
    if (name == "complete") {
        need(1, "N");
        return complete_graph(args[0]);
    }
    if (name == "star") {
        need(1, "N");
        return star_graph(args[0]);
    }
    if (name == "path") {
        need(1, "N");
        return path_graph(args[0]);
    }
    if (name == "cycle") {
        need(1, "N");
        return cycle_graph(args[0]);
    }
    if (name == "multipartite") {
        if (args.size() < 2)
            throw CLI::ValidationError("--family multipartite expects at least two part sizes");
        return complete_multipartite(PartiteSpec(args));
    }
    if (name == "split") {
        need(2, "N ALPHA");
        return complete_split(args[0], args[1]);
    }
    if (name == "balanced") {
        need(2, "N CHI");
        if (args[1] < 2 || args[0] % args[1] != 0)
            throw CLI::ValidationError("--family balanced expects CHI >= 2 dividing N");
        std::vector<int> parts(static_cast<std::size_t>(args[1]), args[0] / args[1]);
        return complete_multipartite(PartiteSpec(parts));
    }
    throw CLI::ValidationError("unknown family: " + name);
}

Graph resolve_graph(const std::string& g6, const std::string& family,
                    const std::vector<int>& family_args) {
    if (!g6.empty() && !family.empty())
        throw CLI::ValidationError("--g6 and --family are mutually exclusive");
    if (!g6.empty()) return parse_graph6(g6);
    if (!family.empty()) return graph_from_family(family, family_args);
    throw CLI::ValidationError("one of --g6 or --family is required");
}

std::ostream& open_output(std::ofstream& file, const std::string& path, bool append = false) {
    if (path.empty()) return std::cout;
    file.open(path, append ? std::ios::app : std::ios::out);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::vector<Graph> load_graph6_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read graph6 stream: " + path);
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

// Sweep input: either the builtin enumeration up to --n-max or an external
// stream (one graph per line), used as given.
std::vector<Graph> sweep_graphs(int n_max, const std::string& stream, int threads) {
    if (!stream.empty()) return load_graph6_stream(stream);
    std::vector<Graph> graphs;
    for (int n = 1; n <= n_max; ++n) {
        auto part = enumerate_connected(n, threads);
        graphs.insert(graphs.end(), part.begin(), part.end());
    }
    return graphs;
}

int cmd_spectrum(const Graph& g, const std::string& format, std::ostream& out) {
    GraphAnalysis a = analyze(g);
    if (format == "csv")
        out << spectrum_csv(a);
    else
        out << run_record(a, /*with_checks=*/true).dump(2) << "\n";
    return 0;
}

int cmd_params(const Graph& g, const std::string& format, std::ostream& out) {
    GraphAnalysis a = analyze(g);
    if (format == "csv")
        out << params_csv(a.g, a.params);
    else
        out << json{{"graph6", to_graph6(a.g)}, {"params", params_to_json(a.g, a.params)}}.dump(2)
            << "\n";
    return 0;
}

struct VerifyLine {
    std::string graph6;
    int n = 0;
    int applicable = 0;
    std::vector<std::string> failures;
};

int cmd_verify(int n_max, const std::string& stream, const std::vector<std::string>& check_ids,
               int threads, std::ostream& out) {
    std::set<std::string> wanted(check_ids.begin(), check_ids.end());
    for (const auto& id : wanted) {
        bool known = false;
        for (const auto& e : check_registry()) known = known || e.info.id == id;
        if (!known) throw CLI::ValidationError("unknown check id: " + id);
    }
    std::vector<Graph> graphs = sweep_graphs(n_max, stream, threads);
    std::vector<VerifyLine> lines(graphs.size());
    parallel_for(graphs.size(), resolve_thread_count(threads), [&](std::size_t i) {
        GraphAnalysis a = analyze(graphs[i]);
        VerifyLine& line = lines[i];
        line.graph6 = to_graph6(a.g);
        line.n = a.g.n;
        for (const CheckReport& r : run_all(a)) {
            if (!wanted.empty() && !wanted.count(r.id)) continue;
            if (!r.applicable) continue;
            ++line.applicable;
            if (!r.holds) line.failures.push_back(r.id);
        }
    });
    std::stable_sort(lines.begin(), lines.end(), [](const VerifyLine& a, const VerifyLine& b) {
        return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
    });
    std::size_t falsified = 0;
    for (const VerifyLine& line : lines) {
        json j{{"graph6", line.graph6},
               {"n", line.n},
               {"applicable", line.applicable},
               {"failures", line.failures}};
        out << j.dump() << "\n";
        if (!line.failures.empty()) ++falsified;
    }
    out << json{{"graphs", lines.size()}, {"falsified", falsified}}.dump() << "\n";
    return falsified == 0 ? 0 : 2;
}

int cmd_search(const std::string& problem, int n_max, const std::string& stream, int min_diameter,
               int threads, std::ostream& out) {
    std::vector<Graph> graphs = sweep_graphs(n_max, stream, threads);
    auto findings = find_equality_cases(problem, graphs, min_diameter, threads);
    std::stable_sort(findings.begin(), findings.end(),
                     [](const EqualityFinding& a, const EqualityFinding& b) {
                         return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
                     });
    for (const EqualityFinding& f : findings) out << finding_to_json(f).dump() << "\n";
    return 0;
}

int cmd_catalog(std::ostream& out) {
    json j = json::array();
    for (const CheckInfo& info : check_catalog())
        j.push_back(json{{"id", info.id},
                         {"hypothesis", info.hypothesis},
                         {"interval", info.interval},
                         {"bound", info.bound}});
    out << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distance Laplacian spectrum toolkit"};
    app.require_subcommand(1);

    std::string g6, family, format = "json", out_path, stream, problem;
    std::vector<int> family_args;
    std::vector<std::string> check_ids;
    int n_max = 6, threads = 0, min_diameter = 0;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--family", family,
                        "family name: complete|star|path|cycle|multipartite|split|balanced");
        cmd->add_option("args", family_args, "family arguments");
        cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "exact + numeric spectrum with checks");
    add_graph_opts(spectrum);
    CLI::App* params = app.add_subcommand("params", "structural invariants only");
    add_graph_opts(params);

    CLI::App* verify = app.add_subcommand("verify", "run every check over a graph sweep");
    verify->add_option("--n-max", n_max, "enumerate all connected graphs up to this order");
    verify->add_option("--checks", check_ids, "subset of check ids")->delimiter(',');
    verify->add_option("--g6-stream", stream, "newline-delimited graph6 file instead");
    verify->add_option("--threads", threads, "worker threads (default: hardware)");
    verify->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* search = app.add_subcommand("search", "mine equality cases of the open problems");
    search->add_option("--problem", problem, "P1|P2|P3")
        ->required()
        ->check(CLI::IsMember({"P1", "P2", "P3"}));
    search->add_option("--n-max", n_max, "enumerate all connected graphs up to this order");
    search->add_option("--g6-stream", stream, "newline-delimited graph6 file instead");
    search->add_option("--diameter-min", min_diameter, "minimum diameter filter (P3 default: 3)");
    search->add_option("--threads", threads, "worker threads (default: hardware)");
    search->add_option("--out", out_path, "output file (append mode)");

    CLI::App* catalog = app.add_subcommand("catalog", "machine-readable check registry");
    catalog->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        if (spectrum->parsed()) {
            std::ostream& out = open_output(file, out_path);
            return cmd_spectrum(resolve_graph(g6, family, family_args), format, out);
        }
        if (params->parsed()) {
            std::ostream& out = open_output(file, out_path);
            return cmd_params(resolve_graph(g6, family, family_args), format, out);
        }
        if (verify->parsed()) {
            std::ostream& out = open_output(file, out_path);
            return cmd_verify(n_max, stream, check_ids, threads, out);
        }
        if (search->parsed()) {
            if (problem == "P3" && search->count("--diameter-min") == 0) min_diameter = 3;
            std::ostream& out = open_output(file, out_path, /*append=*/true);
            return cmd_search(problem, n_max, stream, min_diameter, threads, out);
        }
        if (catalog->parsed()) {
            std::ostream& out = open_output(file, out_path);
            return cmd_catalog(out);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
