// Command-line experiment runner.
//
//   nipa_cli --network karate --strategy nipa,oas,hdf,hbf --mode curve-sweep --repeats 10 --out runs/karate
//
// Flags override values read from --config. Exit codes: 0 success, 1 config
// error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nipa/error.hpp"
#include "nipa/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Network disintegration experiments (NIPA, OAS, HDF, HBF)"};

    std::string config_path, network, strategy, mode, q_range, out;
    std::optional<std::size_t> q, pop_size, iters, tabu, repeats;
    std::optional<double> alpha;
    std::optional<std::uint64_t> seed;
    bool csv = false, json = false, trace = false;

    app.add_option("--config", config_path, "Key=value configuration file");
    app.add_option("--network", network, "karate | ba | er | ws | edge-list path");
    app.add_option("--strategy", strategy, "Comma list of nipa,oas,hdf,hbf,bruteforce");
    app.add_option("--mode", mode, "single-q | curve-sweep | qc-search | alpha-scan | popsize-scan");
    app.add_option("--q", q, "Attack size Q for single-q mode");
    app.add_option("--q-range", q_range, "first:last:step for curve-sweep mode");
    app.add_option("--alpha", alpha, "Reserved fraction (0, 1)");
    app.add_option("--pop-size", pop_size, "Population size");
    app.add_option("--iters", iters, "Generations per optimisation");
    app.add_option("--tabu", tabu, "OAS tabu list length");
    app.add_option("--repeats", repeats, "Independent repeats");
    app.add_option("--seed", seed, "Base seed");
    app.add_option("--out", out, "Output directory");
    app.add_flag("--csv", csv, "Write CSV output only (unless --json is also given)");
    app.add_flag("--json", json, "Write JSON output only (unless --csv is also given)");
    app.add_flag("--trace", trace, "Write per-iteration best-S traces (single-q mode)");
    app.allow_extras(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ostringstream text;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config '" << config_path << "'\n";
            return 1;
        }
        text << in.rdbuf() << '\n';
    }
    auto set = [&](const char* key, const auto& value) { text << key << '=' << value << '\n'; };
    if (!network.empty()) set("network", network);
    if (!strategy.empty()) set("strategy", strategy);
    if (!mode.empty()) set("mode", mode);
    if (q) set("Q", *q);
    if (!q_range.empty()) set("q_range", q_range);
    if (alpha) set("alpha", *alpha);
    if (pop_size) set("pop_size", *pop_size);
    if (iters) set("iters", *iters);
    if (tabu) set("tabu", *tabu);
    if (repeats) set("repeats", *repeats);
    if (seed) set("seed", *seed);
    if (!out.empty()) set("out", out);
    if (csv || json) {
        set("csv", csv ? "true" : "false");
        set("json", json ? "true" : "false");
    }
    if (trace) set("trace", "true");

    nipa::ExperimentConfig config;
    try {
        config = nipa::parse_config(text.str());
    } catch (const nipa::Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    try {
        const auto report = nipa::run_experiment(config);
        for (const auto& path : nipa::write_outputs(report)) std::cout << path.string() << '\n';
        for (const auto& [kind, s] : nipa::summarize(report)) {
            std::cout << nipa::to_string(kind) << ": best_S=" << s.best_s;
            if (s.r_mean) std::cout << " R_mean=" << *s.r_mean;
            if (s.qc_mean) std::cout << " qc_mean=" << *s.qc_mean;
            std::cout << " |best set|=" << s.best_attack_set.size() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
