#pragma once

#include <chrono>
#include <climits>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kplex/io.hpp"
#include "kplex/report.hpp"
#include "kplex/search.hpp"

namespace kplex {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidFlags = 2,
    kExitParseFailure = 3,
    kExitTimeout = 4,
    kExitTooLarge = 5,
    kExitIoFailure = 6,
};

/// Command-line front end. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact maximum k-plex search"};
    std::string graph_path, mode_name = "exact-altrb", stats_path;
    int k = 0;
    double time_limit = 3600.0;
    bool quiet = false;
    app.add_option("--graph", graph_path, "Edge list or DIMACS file")->required();
    app.add_option("--k", k, "k >= 2")->required()->check(CLI::Range(2, INT_MAX));
    app.add_option("--mode", mode_name, "exact-altrb | exact-seqrb | heuristic | oracle")
        ->check(CLI::IsMember({"exact-altrb", "exact-seqrb", "heuristic", "oracle"}));
    app.add_option("--time-limit", time_limit, "Seconds (0 disables)")->check(CLI::NonNegativeNumber);
    app.add_option("--stats-json", stats_path, "Write a JSON run report here");
    app.add_flag("--quiet", quiet, "Only print the result");

    std::vector<std::string> argv_store{"kplex"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidFlags;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Graph g;
    try {
        g = parse_graph_file(graph_path);
    } catch (const ParseError& e) {
        err << "error: " << graph_path << ": " << e.what() << '\n';
        return kExitParseFailure;
    }

    SolverConfig cfg;
    cfg.k = k;
    cfg.mode = *parse_mode(mode_name);
    cfg.time_limit_s = time_limit;
    Solution sol;
    try {
        sol = kpex(g, cfg);
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitTooLarge;
    }

    RunReport report{GraphSummary::of(g), k, cfg.mode, time_limit, sol,
                     std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()};

    out << sol.size << '\n';
    for (std::size_t i = 0; i < sol.labels.size(); ++i) out << (i ? " " : "") << sol.labels[i];
    out << '\n';

    if (!quiet) {
        err << "n=" << g.n() << " m=" << g.m() << " k=" << k << " mode=" << mode_name
            << " status=" << to_string(sol.status) << " branches=" << sol.stats.branches
            << " mean_r=" << sol.stats.mean_r() << " total_ms=" << sol.stats.t_total_ms << '\n';
        if (sol.status == Status::none)
            err << "no k-plex with at least " << 2 * k - 1 << " vertices; any " << std::min(g.n(), k)
                << " vertices form a k-plex\n";
        if (sol.status == Status::timeout) err << "time limit reached; result is the best found so far\n";
    }

    if (!stats_path.empty()) {
        std::ofstream f(stats_path);
        if (!f) {
            err << "error: cannot write '" << stats_path << "'\n";
            return kExitIoFailure;
        }
        f << to_json(report).dump(2) << '\n';
    }
    return sol.status == Status::timeout ? kExitTimeout : kExitOk;
}

}  // namespace kplex
