#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nipa/metrics.hpp"
#include "nipa/netgen.hpp"
#include "nipa/strategies.hpp"

namespace nipa {

inline constexpr std::string_view kVersion = "1.0.0";

enum class StrategyKind { NIPA, OAS, HDF, HBF, BruteForce };
enum class ExperimentMode { SingleQ, CurveSweep, QcSearch, AlphaScan, PopsizeScan };

std::string to_string(StrategyKind kind);
std::string to_string(ExperimentMode mode);

struct QRange {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t step = 1;

    friend bool operator==(const QRange&, const QRange&) = default;
};

/// Flat key=value configuration; see parse_config for the keys.
struct ExperimentConfig {
    NetworkSpec network;
    std::vector<StrategyKind> strategies{StrategyKind::NIPA};
    ExperimentMode mode = ExperimentMode::SingleQ;
    NipaParams nipa;
    OasParams oas;
    std::optional<std::size_t> q;
    std::optional<QRange> q_range;
    bool full_resolution = false;
    std::size_t repeats = 1;
    std::uint64_t seed = 0;
    CollapseOptions collapse;
    bool hbf_adaptive = false;
    std::uint64_t brute_force_cap = kDefaultEnumerationCap;
    std::vector<double> alpha_values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<std::size_t> pop_sizes{100, 200, 300, 400, 500};
    std::string out_dir = ".";
    bool csv = true;
    bool json = true;
    bool trace = false;
};

/// Parses whitespace-separated key=value tokens ('#' comments to end of line),
/// applies defaults and validates. Throws ConfigError naming the field.
///
/// Keys: network (karate|ba|er|ws|<edge-list path>), n, m, m0, p, one_based,
/// strategy (comma list of nipa,oas,hdf,hbf,bruteforce), mode (single-q,
/// curve-sweep, qc-search, alpha-scan, popsize-scan), Q, q_range (a:b:step),
/// full_resolution, alpha, pop_size, iters, tabu, repeats, seed, collapse
/// (kappa|size), s_min, warm_start, hbf_adaptive, weighted_mutation, threads,
/// alpha_values, pop_sizes, brute_force_cap, out, csv, json, trace.
ExperimentConfig parse_config(std::string_view text);

/// Canonical key=value text; parse_config(to_config_text(c)) reproduces c.
std::string to_config_text(const ExperimentConfig& config);

struct RunRecord {
    StrategyKind strategy = StrategyKind::NIPA;
    std::uint64_t seed = 0;
    AttackCurve curve;
    std::optional<double> r;
    bool r_approximate = false;
    std::optional<double> qc;
    std::vector<NodeId> best_attack_set;  // 0-based
    double best_s = 1.0;
    double best_kappa = 0.0;
    std::vector<double> trace;
    double seconds_per_generation = 0.0;
};

struct ScanRecord {
    std::uint64_t seed = 0;
    double parameter = 0.0;  // alpha or population size
    double qc = 1.0;
    std::size_t attack_size = 0;
};

struct StrategySummary {
    std::optional<double> r_mean, r_std, qc_mean, qc_std;
    double best_s = 1.0;
    std::vector<NodeId> best_attack_set;  // 0-based
};

struct ExperimentReport {
    ExperimentConfig config;
    std::size_t node_count = 0;
    std::vector<RunRecord> runs;  // sorted by strategy name, then seed
    std::vector<ScanRecord> scan;
    std::string version{kVersion};
};

/// Runs every (strategy, repeat) with repeat seeds base + 0 .. base + repeats - 1.
/// Network instances depend only on the repeat seed, so all strategies of a
/// repeat see the same graph.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Mean/std (sample, n - 1) across repeats per strategy.
std::vector<std::pair<StrategyKind, StrategySummary>> summarize(const ExperimentReport& report);

void emit_csv(const ExperimentReport& report, std::ostream& out);
void emit_summary_json(const ExperimentReport& report, std::ostream& out);
void emit_report_json(const ExperimentReport& report, std::ostream& out);
void emit_scan_csv(const ExperimentReport& report, std::ostream& out);
void emit_timing_csv(const ExperimentReport& report, std::ostream& out);
void emit_trace_csv(const RunRecord& run, std::ostream& out);

/// Writes the files selected by the config flags into config.out_dir.
/// Returns the paths written.
std::vector<std::filesystem::path> write_outputs(const ExperimentReport& report);

}  // namespace nipa
