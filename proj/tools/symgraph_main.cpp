#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symgraph/automorphism.hpp"
#include "symgraph/cardinality.hpp"
#include "symgraph/feasibility.hpp"
#include "symgraph/graph_io.hpp"
#include "symgraph/metrics.hpp"
#include "symgraph/quotient.hpp"
#include "symgraph/rewire.hpp"
#include "symgraph/wiring.hpp"

namespace {

using namespace symgraph;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// Inclusive "a..b" range or comma list.
std::vector<int> parse_scales(const std::string& spec) {
    std::vector<int> out;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        int a = std::stoi(spec.substr(0, dots));
        int b = std::stoi(spec.substr(dots + 2));
        if (a < 1 || b < a) throw std::runtime_error("bad scale range '" + spec + "'");
        for (int s = a; s <= b; ++s) out.push_back(s);
        return out;
    }
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int s = std::stoi(item);
        if (s < 1) throw std::runtime_error("bad scale '" + item + "'");
        out.push_back(s);
    }
    if (out.empty()) throw std::runtime_error("empty scale list");
    return out;
}

int cmd_check(const std::string& path) {
    auto q = parse_quotient(read_file(path));
    auto sys = build_system(q);
    auto res = is_feasible(sys);
    if (res.feasible) {
        std::cout << "FEASIBLE\n";
        std::cout << "x =";
        for (auto v : res.certificate) std::cout << " " << v;
        std::cout << "\nx_lower =";
        for (auto v : sys.x_lower) std::cout << " " << v;
        std::cout << "\n";
        return 0;
    }
    std::cout << "INFEASIBLE\nwitness cycle:";
    for (auto [j, k] : res.witness_cycle)
        std::cout << " (" << j + 1 << "," << k + 1 << ")";
    std::cout << "\n";
    return 2;
}

CardinalitySolution solve_for(const QuotientGraph& q, long long s) {
    auto sol = solve_minimal(build_system(q));
    return s > 1 ? scale(sol, s) : sol;
}

int cmd_solve(const std::string& path, long long s) {
    auto q = parse_quotient(read_file(path));
    auto sol = solve_for(q, s);
    for (size_t i = 0; i < sol.n.size(); ++i)
        std::cout << "cluster " << i + 1 << ": x = " << sol.x[i]
                  << ", n = " << sol.n[i] << "\n";
    std::cout << "s = " << sol.s << "\ntotal n = " << sol.total_n() << "\n";
    return 0;
}

int cmd_generate(const std::string& path, long long s, bool do_randomize,
                 double swaps, std::uint64_t seed, bool b_random,
                 const std::string& out_path, const std::string& dot_path) {
    auto q = parse_quotient(read_file(path));
    auto sol = solve_for(q, s);
    auto gen = generate(q, sol,
                        b_random ? BChoice::SeededRandom : BChoice::Deterministic,
                        seed);
    Graph g = gen.graph;
    if (do_randomize) g = randomize(g, gen.partition, seed, swaps);
    write_file(out_path, serialize_graph(g, gen.partition));
    if (!dot_path.empty()) write_file(dot_path, to_dot(g, gen.partition.assignment()));
    std::cout << "n = " << g.num_vertices() << ", edges = " << g.num_edges()
              << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, bool show_mbc, bool show_oag,
                bool show_metric) {
    auto gf = parse_graph(read_file(path));
    const Graph& g = gf.graph;
    std::cout << "n " << g.num_vertices() << "\n";
    Partition mbc;
    OrbitPartition oag;
    bool have_mbc = false, have_oag = false;
    if (show_mbc || show_metric) {
        mbc = coarsest_equitable(g);
        have_mbc = true;
    }
    if (show_oag || show_metric) {
        oag = orbits(g);
        have_oag = true;
    }
    if (show_mbc) {
        std::cout << "mbc " << mbc.num_clusters() << "\nmbc_sizes";
        for (int sz : mbc.sizes()) std::cout << " " << sz;
        std::cout << "\n";
    }
    if (show_oag) {
        std::cout << "oag " << oag.partition.num_clusters() << "\noag_sizes";
        for (int sz : oag.partition.sizes()) std::cout << " " << sz;
        std::cout << "\ngenerators " << oag.generators.size() << "\n";
    }
    if (show_metric) {
        auto f = alignment_metric(g.num_vertices(), mbc.num_clusters(),
                                  oag.partition.num_clusters());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", f.value());
        std::cout << "f " << buf << "\n";
    }
    (void)have_mbc;
    (void)have_oag;
    return 0;
}

int cmd_sweep(const std::string& path, const std::string& scales, int trials,
              std::uint64_t seed, double swaps, const std::string& out_path,
              const std::string& summary_path) {
    auto q = parse_quotient(read_file(path));
    SweepConfig cfg;
    cfg.scales = parse_scales(scales);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.swaps_per_edge = swaps;
    auto records = sweep(q, cfg);
    {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        write_records_csv(out, records);
    }
    auto summaries = summarize(records);
    if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw std::runtime_error("cannot write '" + summary_path + "'");
        write_summary_csv(out, summaries);
    } else {
        write_summary_csv(std::cerr, summaries);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate and analyze graphs realizing a prescribed quotient graph"};
    app.require_subcommand(1);

    std::string qfile, gfile, out_path, dot_path, summary_path, scales = "1..10";
    long long s = 1;
    int trials = 100;
    std::uint64_t seed = 0;
    double swaps = 10.0;
    bool do_randomize = false, b_random = false;
    bool show_mbc = false, show_oag = false, show_metric = false;

    auto* check = app.add_subcommand(
        "check", "Feasibility verdict for a quotient file (exit 0/2)");
    check->add_option("quotient", qfile,
                      "Quotient file: 'quotient <p>', 'self <i> <d>', "
                      "'edge <j> <k> <w0> <w1>' (e.g. 'quotient 2' + 'self 2 1' "
                      "+ 'edge 1 2 2 3')")
        ->required();

    auto* solve = app.add_subcommand("solve", "Minimal cluster cardinalities");
    solve->add_option("quotient", qfile, "Quotient file")->required();
    solve->add_option("--scale", s, "Integer scale factor s >= 1");

    auto* gen = app.add_subcommand("generate", "Wire a full graph from a quotient");
    gen->add_option("quotient", qfile, "Quotient file")->required();
    gen->add_option("--scale", s, "Integer scale factor s >= 1");
    gen->add_flag("--randomize", do_randomize,
                  "Apply quotient-preserving double-edge swaps");
    gen->add_option("--swaps", swaps, "Attempted swaps per edge of each class");
    gen->add_option("--seed", seed, "Master RNG seed");
    gen->add_flag("--b-random", b_random,
                  "Seeded-random inter-cluster offset compositions");
    gen->add_option("-o,--output", out_path,
                    "Output edge list: 'graph <n>', 'node <id> <cluster>', "
                    "'edge <u> <v> [self:<i>|edge:<j>-<k>]'")
        ->required();
    gen->add_option("--dot", dot_path, "Also write a DOT rendering");

    auto* analyze = app.add_subcommand("analyze", "Analyze a graph edge-list file");
    analyze->add_option("graph", gfile, "Graph edge-list file")->required();
    analyze->add_flag("--mbc", show_mbc, "Coarsest equitable partition sizes");
    analyze->add_flag("--oag", show_oag, "Automorphism orbit sizes");
    analyze->add_flag("--metric", show_metric, "Alignment metric f");

    auto* sw = app.add_subcommand("sweep", "Scale sweep of the alignment metric");
    sw->add_option("quotient", qfile, "Quotient file")->required();
    sw->add_option("--scales", scales, "Inclusive range 'a..b' or comma list");
    sw->add_option("--trials", trials, "Trials per scale");
    sw->add_option("--seed", seed, "Master RNG seed");
    sw->add_option("--swaps", swaps, "Attempted swaps per edge of each class");
    sw->add_option("-o,--output", out_path,
                   "Per-trial CSV: s,trial,n,mbc,oag,f")
        ->required();
    sw->add_option("--summary", summary_path,
                   "Summary CSV: s,mean_f,std_f,trials (default: stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*check) return cmd_check(qfile);
        if (*solve) return cmd_solve(qfile, s);
        if (*gen)
            return cmd_generate(qfile, s, do_randomize, swaps, seed, b_random,
                                out_path, dot_path);
        if (*analyze) return cmd_analyze(gfile, show_mbc, show_oag, show_metric);
        if (*sw)
            return cmd_sweep(qfile, scales, trials, seed, swaps, out_path,
                             summary_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
