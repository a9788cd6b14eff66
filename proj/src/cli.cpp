#include "unioncolor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unioncolor/coloring.hpp"
#include "unioncolor/errors.hpp"
#include "unioncolor/graph.hpp"
#include "unioncolor/oracle.hpp"
#include "unioncolor/star_partition.hpp"

namespace unioncolor {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    return out;
}

template <typename T>
void env_override(const char* name, T& value) {
    if (const char* raw = std::getenv(name)) {
        std::istringstream in(raw);
        T parsed{};
        if (in >> parsed && parsed > 0)
            value = parsed;
        else
            throw input_error(std::string("bad value in environment variable ") + name);
    }
}

struct ColorArgs {
    std::string graph_path;
    std::string out_path;
    std::string forest_path;
    bool allow_empty = false;
};

struct VerifyArgs {
    std::string graph_path;
    std::string coloring_path;
    bool allow_empty = false;
};

struct ExactArgs {
    std::string graph_path;
    std::string witness_path;
    int max_k = 0;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct PartitionArgs {
    int k = 0;
    std::vector<std::int64_t> sizes;
    bool with_empty = false;
};

struct GenArgs {
    std::string kind;
    long long n = 0;
    double p = 0.1;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_color(const ColorArgs& args, std::ostream& out) {
    const Graph g = read_graph_file(args.graph_path);
    const EdgeColoring coloring = color_graph(g, args.allow_empty);
    if (!args.forest_path.empty()) {
        const SpanningForest forest = spanning_onestar_forest(g);
        std::vector<Edge> kept;
        for (int e = 0; e < g.edge_count(); ++e)
            if (forest.edge_in_forest[static_cast<std::size_t>(e)])
                kept.push_back(g.edge(e));
        auto fout = open_output(args.forest_path);
        write_graph(Graph(g.vertex_count(), kept), fout);
    }
    const std::string out_path =
        args.out_path.empty() ? args.graph_path + ".coloring" : args.out_path;
    auto cout_file = open_output(out_path);
    write_coloring(g, coloring, args.allow_empty, cout_file);
    const VerifyReport report = verify(g, coloring, args.allow_empty);
    out << "k=" << coloring.k << " valid=" << (report.valid ? "true" : "false")
        << "\n";
    return report.valid ? 0 : 1;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
    const Graph g = read_graph_file(args.graph_path);
    std::ifstream in(args.coloring_path);
    if (!in) throw input_error("cannot open coloring file: " + args.coloring_path);
    const LoadedColoring loaded = read_coloring(g, in);
    const bool allow_empty = loaded.empty_mode || args.allow_empty;
    const VerifyReport report = verify(g, loaded.coloring, allow_empty);
    print_report(report, out);
    return report.valid ? 0 : 1;
}

int run_exact(const ExactArgs& args, std::ostream& out) {
    SearchBudget budget;
    env_override("UNIONCOLOR_MAX_K", budget.max_k);
    env_override("UNIONCOLOR_NODE_LIMIT", budget.node_limit);
    env_override("UNIONCOLOR_TIME_LIMIT", budget.time_limit_seconds);
    if (args.max_k > 0) budget.max_k = args.max_k;
    if (args.nodes > 0) budget.node_limit = args.nodes;
    if (args.seconds > 0) budget.time_limit_seconds = args.seconds;

    const Graph g = read_graph_file(args.graph_path);
    const ExactResult result = exact_index(g, budget);
    out << "chi=" << result.index << " nodes=" << result.nodes << "\n";
    const std::string witness_path =
        args.witness_path.empty() ? args.graph_path + ".witness" : args.witness_path;
    auto wout = open_output(witness_path);
    write_coloring(g, result.witness, false, wout);
    return 0;
}

int run_partition(const PartitionArgs& args, std::ostream& out) {
    const SizeComposition comp{args.sizes, args.k};
    const std::vector<StarSequence> blocks =
        args.with_empty ? partition_with_empty(comp) : partition(comp);
    for (const StarSequence& block : blocks) {
        bool first = true;
        for (const Label& label : block) {
            if (!first) out << ' ';
            out << label.str();
            first = false;
        }
        out << "\n";
    }
    return 0;
}

int run_gen(const GenArgs& args, std::ostream& out) {
    const Graph g = generate(GenRequest{args.kind, args.n, args.p, args.seed});
    if (args.out_path.empty()) {
        write_graph(g, out);
    } else {
        auto fout = open_output(args.out_path);
        write_graph(g, fout);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"union vertex-distinguishing edge coloring toolkit"};
    app.name("unioncolor");
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color_cmd =
        app.add_subcommand("color", "color a graph and write the coloring file");
    color_cmd->add_option("graph", color_args.graph_path, "edge-list file")->required();
    color_cmd->add_option("-o,--output", color_args.out_path,
                          "coloring file (defaults to <graph>.coloring)");
    color_cmd->add_option("--dump-forest", color_args.forest_path,
                          "also write the spanning forest of 1-stars as an edge list");
    color_cmd->add_flag("--allow-empty", color_args.allow_empty,
                        "allow the empty set on edges");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "check a coloring file against a graph");
    verify_cmd->add_option("graph", verify_args.graph_path, "edge-list file")->required();
    verify_cmd->add_option("coloring", verify_args.coloring_path, "coloring file")
        ->required();
    verify_cmd->add_flag("--allow-empty", verify_args.allow_empty,
                         "treat empty labels as legal regardless of the file header");

    ExactArgs exact_args;
    auto* exact_cmd = app.add_subcommand(
        "exact", "exhaustively compute the exact chromatic index on a small graph");
    exact_cmd->add_option("graph", exact_args.graph_path, "edge-list file")->required();
    exact_cmd->add_option("--max-k", exact_args.max_k, "color cap");
    exact_cmd->add_option("--nodes", exact_args.nodes, "backtracking node cap");
    exact_cmd->add_option("--seconds", exact_args.seconds, "wall-clock cap");
    exact_cmd->add_option("-o,--output", exact_args.witness_path,
                          "witness coloring file (defaults to <graph>.witness)");

    PartitionArgs partition_args;
    auto* partition_cmd = app.add_subcommand(
        "partition", "partition the subsets of [k] into stars of given sizes");
    partition_cmd->add_option("-k", partition_args.k, "ground set size")->required();
    partition_cmd
        ->add_option("-m,--sizes", partition_args.sizes, "comma-separated block sizes")
        ->required()
        ->delimiter(',');
    partition_cmd->add_flag("--empty", partition_args.with_empty,
                            "cover the empty set as well (sizes sum to 2^k)");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family instance");
    gen_cmd
        ->add_option("kind", gen_args.kind,
                     "path|cycle|star|complete|hypercube|complete-binary-tree|random")
        ->required();
    gen_cmd->add_option("n", gen_args.n, "order (dimension for hypercube)")->required();
    gen_cmd->add_option("p", gen_args.p, "edge probability (random only)");
    gen_cmd->add_option("--seed", gen_args.seed, "random seed");
    gen_cmd->add_option("-o,--output", gen_args.out_path, "edge-list file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("unioncolor");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*color_cmd) return run_color(color_args, out);
        if (*verify_cmd) return run_verify(verify_args, out);
        if (*exact_cmd) return run_exact(exact_args, out);
        if (*partition_cmd) return run_partition(partition_args, out);
        if (*gen_cmd) return run_gen(gen_args, out);
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace unioncolor
