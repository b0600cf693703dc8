#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dim/gen.hpp"
#include "dim/graph.hpp"
#include "dim/oracle.hpp"
#include "dim/report.hpp"
#include "dim/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_text_report(const dim::RunReport& r, bool with_edges, const dim::Solution& s)
{
    if (!r.found) {
        if (s.k4) {
            std::cout << r.input << ": no DIM (K4 found on vertices " << (*s.k4)[0] + 1 << " "
                      << (*s.k4)[1] + 1 << " " << (*s.k4)[2] + 1 << " " << (*s.k4)[3] + 1 << ")\n";
        } else {
            std::cout << r.input << ": no DIM\n";
        }
    } else {
        std::cout << r.input << ": DIM found\n";
        std::cout << "weight: " << dim::format_weight(*r.weight) << "\n";
        if (with_edges) {
            std::cout << "edges:";
            if (r.edges.empty())
                std::cout << " (empty matching)";
            for (auto [u, v] : r.edges)
                std::cout << " " << u << "-" << v;
            std::cout << "\n";
        }
    }
    std::cout << "count: " << r.count << "\n";
    std::cout << "nodes: " << r.nodes << ", leaves: " << r.leaves
              << ", max stack: " << r.max_stack << "\n";
    std::cout << "wall: " << r.wall_ms << " ms\n";
}

int run_solver_command(const std::string& path, bool json, bool keep_edges, bool oracle_mode,
                       bool exists_only)
{
    dim::Graph g = dim::load_graph(path);
    auto start = Clock::now();
    dim::Solution s;
    if (oracle_mode) {
        dim::OracleResult r = dim::brute_force_solve(g);
        s.status = r.found ? dim::Solution::Status::found : dim::Solution::Status::no_dim;
        s.min_weight = r.min_weight;
        s.count = mpz_class(static_cast<unsigned long>(r.count));
        s.witness = std::move(r.witness);
    } else {
        s = dim::solve(g);
    }
    double ms = elapsed_ms(start);

    dim::RunReport report = dim::make_report(path, g, s, ms);
    if (!keep_edges)
        report.edges.clear();
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else if (exists_only) {
        std::cout << path << ": " << (report.found ? "DIM exists" : "no DIM") << "\n";
    } else {
        print_text_report(report, keep_edges, s);
    }
    return report.found ? 0 : 1;
}

struct BenchRow {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    double bound = 0.0;
    bool found = false;
    bool pass = false;
    double wall_ms = 0.0;
};

dim::Graph path_graph(int n)
{
    dim::Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1, 1.0);
    return g;
}

dim::Graph cycle_graph(int n)
{
    dim::Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(0, n - 1, 1.0);
    return g;
}

dim::Graph grid_graph(int n)
{
    int width = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    dim::Graph g(n);
    for (int v = 0; v < n; ++v) {
        if ((v + 1) % width != 0 && v + 1 < n)
            g.add_edge(v, v + 1, 1.0);
        if (v + width < n)
            g.add_edge(v, v + width, 1.0);
    }
    return g;
}

int run_bench(const std::string& family, int nmin, int nmax, double p, int seeds, bool json)
{
    std::vector<BenchRow> rows;
    for (int n = nmin; n <= nmax; ++n) {
        int reps = family == "gnp" ? seeds : 1;
        for (int seed = 1; seed <= reps; ++seed) {
            dim::Graph g;
            if (family == "gnp")
                g = dim::random_graph(n, p, 1.0, 1.0, static_cast<std::uint64_t>(seed));
            else if (family == "path")
                g = path_graph(n);
            else if (family == "cycle")
                g = cycle_graph(n);
            else if (family == "grid")
                g = grid_graph(n);
            else
                throw std::runtime_error("unknown family '" + family + "'");

            auto start = Clock::now();
            dim::Solution s = dim::solve(g);
            BenchRow row;
            row.family = family;
            row.n = n;
            row.seed = seed;
            row.nodes = s.stats.nodes;
            row.leaves = s.stats.leaves;
            row.bound = 8.0 * std::pow(1.1939, n);
            row.found = s.status == dim::Solution::Status::found;
            row.pass = static_cast<double>(s.stats.leaves) <= row.bound
                && s.stats.max_stack <= static_cast<std::uint64_t>(n) + 1;
            row.wall_ms = elapsed_ms(start);
            rows.push_back(row);
        }
    }

    bool all_pass = true;
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const BenchRow& r : rows) {
            out.push_back({{"family", r.family},
                           {"n", r.n},
                           {"seed", r.seed},
                           {"nodes", r.nodes},
                           {"leaves", r.leaves},
                           {"bound", r.bound},
                           {"status", r.found ? "found" : "no-dim"},
                           {"pass", r.pass},
                           {"wall_ms", r.wall_ms}});
            all_pass = all_pass && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-6s %5s %6s %10s %10s %14s %8s %10s %6s\n", "family", "n", "seed", "nodes",
                    "leaves", "bound", "status", "wall_ms", "ok");
        for (const BenchRow& r : rows) {
            std::printf("%-6s %5d %6llu %10llu %10llu %14.1f %8s %10.2f %6s\n", r.family.c_str(),
                        r.n, static_cast<unsigned long long>(r.seed),
                        static_cast<unsigned long long>(r.nodes),
                        static_cast<unsigned long long>(r.leaves), r.bound,
                        r.found ? "found" : "no-dim", r.wall_ms, r.pass ? "pass" : "FAIL");
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact minimum-weight dominating induced matching solver"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;

    CLI::App* solve = app.add_subcommand("solve", "find a minimum-weight DIM and the DIM count");
    solve->add_option("file", file, "input graph")->required();
    solve->add_flag("--json", json, "emit a JSON report");

    CLI::App* count = app.add_subcommand("count", "count DIMs (no witness output)");
    count->add_option("file", file, "input graph")->required();
    count->add_flag("--json", json, "emit a JSON report");

    CLI::App* exists = app.add_subcommand("exists", "decide whether any DIM exists");
    exists->add_option("file", file, "input graph")->required();
    exists->add_flag("--json", json, "emit a JSON report");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solver (small n)");
    oracle->add_option("file", file, "input graph")->required();
    oracle->add_flag("--json", json, "emit a JSON report");

    CLI::App* gen = app.add_subcommand("gen", "generate a random G(n, p) instance");
    int gen_n = 0;
    double gen_p = 0.0, wmin = 1.0, wmax = 1.0;
    std::uint64_t gen_seed = 0;
    std::string out_path;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("--wmin", wmin, "minimum weight (default 1)");
    gen->add_option("--wmax", wmax, "maximum weight (default 1)");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "search-tree size against the 8*1.1939^n bound");
    std::string family = "gnp";
    int nmin = 10, nmax = 30, seeds = 1;
    double bench_p = 0.2;
    bench->add_option("--family", family, "gnp | path | cycle | grid")->required();
    bench->add_option("--nmin", nmin, "smallest n")->required();
    bench->add_option("--nmax", nmax, "largest n")->required();
    bench->add_option("--p", bench_p, "edge probability for gnp (default 0.2)");
    bench->add_option("--seeds", seeds, "seeds per n for gnp (default 1)");
    bench->add_flag("--json", json, "emit JSON rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed())
            return run_solver_command(file, json, true, false, false);
        if (count->parsed())
            return run_solver_command(file, json, false, false, false);
        if (exists->parsed())
            return run_solver_command(file, json, true, false, true);
        if (oracle->parsed())
            return run_solver_command(file, json, true, true, false);
        if (gen->parsed()) {
            dim::Graph g = dim::random_graph(gen_n, gen_p, wmin, wmax, gen_seed);
            std::string text = "c gen n=" + std::to_string(gen_n) + " p=" + dim::format_weight(gen_p)
                + " seed=" + std::to_string(gen_seed) + " wmin=" + dim::format_weight(wmin)
                + " wmax=" + dim::format_weight(wmax) + "\n" + dim::write_graph(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out)
                    throw std::runtime_error("cannot write '" + out_path + "'");
                out << text;
            }
            return 0;
        }
        if (bench->parsed())
            return run_bench(family, nmin, nmax, bench_p, seeds, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
