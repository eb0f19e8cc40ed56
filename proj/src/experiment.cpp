#include "nipa/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include "json.hpp"

#include "nipa/error.hpp"

namespace nipa {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
T parse_number(const std::string& field, std::string_view value) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
        throw ConfigError(field, "'" + std::string(value) + "' is not a valid number");
    }
    return out;
}

std::size_t parse_count(const std::string& field, std::string_view value, std::size_t min = 0) {
    const auto v = parse_number<std::uint64_t>(field, value);
    if (v < min) throw ConfigError(field, "must be at least " + std::to_string(min));
    return static_cast<std::size_t>(v);
}

double parse_probability(const std::string& field, std::string_view value) {
    const double v = parse_number<double>(field, value);
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(field, "must lie in [0, 1]");
    return v;
}

double parse_alpha(const std::string& field, std::string_view value) {
    const double v = parse_number<double>(field, value);
    if (!(v > 0.0 && v < 1.0)) throw ConfigError(field, "must lie in (0, 1)");
    return v;
}

bool parse_bool(const std::string& field, std::string_view value) {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(field, "expected a boolean");
}

StrategyKind parse_strategy(const std::string& name) {
    const std::string v = lower(name);
    if (v == "nipa") return StrategyKind::NIPA;
    if (v == "oas") return StrategyKind::OAS;
    if (v == "hdf") return StrategyKind::HDF;
    if (v == "hbf") return StrategyKind::HBF;
    if (v == "bruteforce" || v == "brute-force") return StrategyKind::BruteForce;
    throw ConfigError("strategy", "unknown strategy '" + name + "'");
}

ExperimentMode parse_mode(std::string_view name) {
    const std::string v = lower(name);
    if (v == "single-q") return ExperimentMode::SingleQ;
    if (v == "curve-sweep") return ExperimentMode::CurveSweep;
    if (v == "qc-search") return ExperimentMode::QcSearch;
    if (v == "alpha-scan") return ExperimentMode::AlphaScan;
    if (v == "popsize-scan") return ExperimentMode::PopsizeScan;
    throw ConfigError("mode", "unknown mode '" + std::string(name) + "'");
}

std::uint64_t strategy_stream(StrategyKind kind) { return static_cast<std::uint64_t>(kind) + 1; }

bool is_scan(ExperimentMode mode) { return mode == ExperimentMode::AlphaScan || mode == ExperimentMode::PopsizeScan; }

std::string join_ids(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::NIPA: return "NIPA";
        case StrategyKind::OAS: return "OAS";
        case StrategyKind::HDF: return "HDF";
        case StrategyKind::HBF: return "HBF";
        case StrategyKind::BruteForce: return "BruteForce";
    }
    return "unknown";
}

std::string to_string(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::SingleQ: return "single-q";
        case ExperimentMode::CurveSweep: return "curve-sweep";
        case ExperimentMode::QcSearch: return "qc-search";
        case ExperimentMode::AlphaScan: return "alpha-scan";
        case ExperimentMode::PopsizeScan: return "popsize-scan";
    }
    return "unknown";
}

ExperimentConfig parse_config(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError(token, "expected key=value");
            std::string key = token.substr(0, eq);
            if (key == "q") key = "Q";
            if (key == "strategies") key = "strategy";
            kv[key] = token.substr(eq + 1);
        }
    }

    ExperimentConfig c;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    const auto network = take("network");
    if (!network || network->empty()) throw ConfigError("network", "missing");
    const std::string model = lower(*network);
    if (model == "karate") c.network.model = NetworkModel::Karate;
    else if (model == "ba") c.network = {.model = NetworkModel::BA, .n = 300, .m = 3, .m0 = 3, .p = 0.8};
    else if (model == "er") c.network = {.model = NetworkModel::ER, .n = 300, .p = 0.02};
    else if (model == "ws") c.network = {.model = NetworkModel::WS, .n = 300, .m = 4, .p = 0.5};
    else c.network = {.model = NetworkModel::File, .path = *network};

    if (auto v = take("n")) c.network.n = parse_count("n", *v, 1);
    if (auto v = take("m")) c.network.m = parse_count("m", *v);
    if (auto v = take("m0")) c.network.m0 = parse_count("m0", *v);
    if (auto v = take("p")) c.network.p = parse_probability("p", *v);
    if (auto v = take("one_based")) c.network.one_based = parse_bool("one_based", *v);
    try {
        c.network.validate();
    } catch (const InvalidSpec& e) {
        throw ConfigError("network", e.what());
    }

    if (auto v = take("strategy")) {
        c.strategies.clear();
        for (const auto& name : split(*v, ',')) {
            const StrategyKind kind = parse_strategy(name);
            if (std::find(c.strategies.begin(), c.strategies.end(), kind) == c.strategies.end()) {
                c.strategies.push_back(kind);
            }
        }
    }
    if (auto v = take("mode")) c.mode = parse_mode(*v);
    if (auto v = take("Q")) c.q = parse_count("Q", *v, 1);
    if (auto v = take("q_range")) {
        const auto parts = split(*v, ':');
        if (parts.size() != 3) throw ConfigError("q_range", "expected first:last:step");
        QRange r{parse_count("q_range", parts[0]), parse_count("q_range", parts[1]),
                 parse_count("q_range", parts[2], 1)};
        if (r.first > r.last) throw ConfigError("q_range", "first exceeds last");
        c.q_range = r;
    }
    if (auto v = take("full_resolution")) c.full_resolution = parse_bool("full_resolution", *v);
    if (auto v = take("alpha")) c.nipa.alpha = parse_alpha("alpha", *v);
    if (auto v = take("pop_size")) c.nipa.population_size = c.oas.population_size = parse_count("pop_size", *v, 1);
    if (auto v = take("iters")) c.nipa.max_iterations = c.oas.max_iterations = parse_count("iters", *v, 1);
    if (auto v = take("tabu")) c.oas.tabu_length = parse_count("tabu", *v);
    if (auto v = take("repeats")) c.repeats = parse_count("repeats", *v, 1);
    if (auto v = take("seed")) c.seed = parse_number<std::uint64_t>("seed", *v);
    if (auto v = take("collapse")) {
        const std::string mode = lower(*v);
        if (mode == "kappa") c.collapse.criterion = CollapseCriterion::Kappa;
        else if (mode == "size") c.collapse.criterion = CollapseCriterion::SizeThreshold;
        else throw ConfigError("collapse", "expected kappa or size");
    }
    if (auto v = take("s_min")) c.collapse.s_min = parse_probability("s_min", *v);
    if (auto v = take("warm_start")) c.collapse.warm_start = parse_bool("warm_start", *v);
    if (auto v = take("hbf_adaptive")) c.hbf_adaptive = parse_bool("hbf_adaptive", *v);
    if (auto v = take("weighted_mutation")) c.nipa.weighted_mutation = parse_bool("weighted_mutation", *v);
    if (auto v = take("threads")) {
        c.nipa.threads = c.oas.threads = static_cast<unsigned>(parse_count("threads", *v, 1));
    }
    if (auto v = take("alpha_values")) {
        c.alpha_values.clear();
        for (const auto& a : split(*v, ',')) c.alpha_values.push_back(parse_alpha("alpha_values", a));
    }
    if (auto v = take("pop_sizes")) {
        c.pop_sizes.clear();
        for (const auto& s : split(*v, ',')) c.pop_sizes.push_back(parse_count("pop_sizes", s, 1));
    }
    if (auto v = take("brute_force_cap")) c.brute_force_cap = parse_count("brute_force_cap", *v, 1);
    if (auto v = take("out")) c.out_dir = *v;
    if (auto v = take("csv")) c.csv = parse_bool("csv", *v);
    if (auto v = take("json")) c.json = parse_bool("json", *v);
    if (auto v = take("trace")) c.trace = parse_bool("trace", *v);

    if (!kv.empty()) throw ConfigError(kv.begin()->first, "unknown key");
    if (c.mode == ExperimentMode::SingleQ && !c.q) throw ConfigError("Q", "required in single-q mode");
    if (c.strategies.empty()) throw ConfigError("strategy", "empty strategy list");
    return c;
}

std::string to_config_text(const ExperimentConfig& c) {
    std::vector<std::string> lines;
    auto add = [&](const std::string& key, const std::string& value) { lines.push_back(key + "=" + value); };
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

    add("network", c.network.model == NetworkModel::File ? c.network.path : to_string(c.network.model));
    if (c.network.model != NetworkModel::Karate && c.network.model != NetworkModel::File) {
        add("n", std::to_string(c.network.n));
        add("m", std::to_string(c.network.m));
        add("m0", std::to_string(c.network.m0));
        add("p", fmt::format("{}", c.network.p));
    }
    add("one_based", flag(c.network.one_based));
    std::string names;
    for (auto k : c.strategies) names += (names.empty() ? "" : ",") + lower(to_string(k));
    add("strategy", names);
    add("mode", to_string(c.mode));
    if (c.q) add("Q", std::to_string(*c.q));
    if (c.q_range) add("q_range", fmt::format("{}:{}:{}", c.q_range->first, c.q_range->last, c.q_range->step));
    add("full_resolution", flag(c.full_resolution));
    add("alpha", fmt::format("{}", c.nipa.alpha));
    add("pop_size", std::to_string(c.nipa.population_size));
    add("iters", std::to_string(c.nipa.max_iterations));
    add("tabu", std::to_string(c.oas.tabu_length));
    add("repeats", std::to_string(c.repeats));
    add("seed", std::to_string(c.seed));
    add("collapse", c.collapse.criterion == CollapseCriterion::Kappa ? "kappa" : "size");
    add("s_min", fmt::format("{}", c.collapse.s_min));
    add("warm_start", flag(c.collapse.warm_start));
    add("hbf_adaptive", flag(c.hbf_adaptive));
    add("weighted_mutation", flag(c.nipa.weighted_mutation));
    add("threads", std::to_string(c.nipa.threads));
    std::string alphas;
    for (double a : c.alpha_values) alphas += (alphas.empty() ? "" : ",") + fmt::format("{}", a);
    add("alpha_values", alphas);
    add("pop_sizes", join_ids(c.pop_sizes));
    add("brute_force_cap", std::to_string(c.brute_force_cap));
    add("out", c.out_dir);
    add("csv", flag(c.csv));
    add("json", flag(c.json));
    add("trace", flag(c.trace));

    std::string text;
    for (const auto& l : lines) text += l + "\n";
    return text;
}

namespace {

/// Produces attack sets of any size for one strategy on one graph instance.
class StrategyRunner {
public:
    StrategyRunner(const Graph& g, const ExperimentConfig& config, StrategyKind kind, std::uint64_t seed)
        : g_(g), config_(config), kind_(kind), seed_(seed) {
        if (kind == StrategyKind::HDF) {
            for (auto [v, score] : degree_ranking(g)) order_.push_back(v);
        } else if (kind == StrategyKind::HBF) {
            if (config.hbf_adaptive) {
                order_ = adaptive_betweenness_order(g, g.node_count());
            } else {
                for (auto [v, score] : betweenness(g)) order_.push_back(v);
            }
        }
    }

    AttackSolution solve(std::size_t removed, const AttackSolution* previous = nullptr) {
        validate_q(g_, removed);
        switch (kind_) {
            case StrategyKind::HDF:
            case StrategyKind::HBF:
                return AttackSolution::from_attack_set(g_.node_count(), std::span(order_).first(removed));
            case StrategyKind::BruteForce:
                return brute_force_optimum(g_, removed, config_.brute_force_cap).solution;
            case StrategyKind::NIPA: {
                NipaParams params = config_.nipa;
                params.seed = derive_seed(seed_, {removed});
                std::optional<AttackSolution> start;
                if (previous != nullptr && previous->attack_count() + 1 == removed) start = extend(*previous);
                return record(nipa_optimize(g_, removed, params, start ? &*start : nullptr));
            }
            case StrategyKind::OAS: {
                OasParams params = config_.oas;
                params.seed = derive_seed(seed_, {removed});
                return record(oas_optimize(g_, removed, params));
            }
        }
        throw InvalidInput("unknown strategy");
    }

    const std::vector<double>& last_trace() const { return last_trace_; }
    double seconds_per_generation() const { return optimizer_calls_ ? generation_seconds_ / optimizer_calls_ : 0.0; }

private:
    AttackSolution record(OptimizeResult result) {
        generation_seconds_ += result.seconds_per_generation;
        ++optimizer_calls_;
        last_trace_ = std::move(result.trace);
        return std::move(result.solution);
    }

    // warm start: previous set plus the highest-degree surviving node
    AttackSolution extend(const AttackSolution& previous) const {
        AttackSolution next = previous;
        for (auto [v, score] : degree_ranking(g_)) {
            if (next.present(v)) {
                next.attack(v);
                break;
            }
        }
        return next;
    }

    const Graph& g_;
    const ExperimentConfig& config_;
    StrategyKind kind_;
    std::uint64_t seed_;
    std::vector<NodeId> order_;
    std::vector<double> last_trace_;
    double generation_seconds_ = 0.0;
    std::size_t optimizer_calls_ = 0;
};

std::vector<std::size_t> sweep_grid(const ExperimentConfig& c, std::size_t n) {
    std::vector<std::size_t> grid;
    if (!c.full_resolution && c.q_range) {
        if (c.q_range->last > n) throw InvalidQ("q_range extends beyond N = " + std::to_string(n));
        for (std::size_t q = c.q_range->first; q <= c.q_range->last; q += c.q_range->step) grid.push_back(q);
        return grid;
    }
    const std::size_t step = c.full_resolution ? 1 : std::max<std::size_t>(1, n / 50);
    for (std::size_t q = 0; q <= n; q += step) grid.push_back(q);
    if (grid.back() != n) grid.push_back(n);
    return grid;
}

RunRecord run_strategy(const Graph& g, const ExperimentConfig& c, StrategyKind kind, std::uint64_t repeat_seed) {
    const std::size_t n = g.node_count();
    StrategyRunner runner(g, c, kind, derive_seed(repeat_seed, {strategy_stream(kind)}));
    RunRecord run;
    run.strategy = kind;
    run.seed = repeat_seed;
    run.curve = {to_string(kind), repeat_seed, n, {}};

    auto settle = [&](const AttackSolution& s, double value) {
        run.best_attack_set = s.attack_nodes();
        run.best_s = value;
        run.best_kappa = s.attack_count() == n ? 0.0 : kappa(g, s.mask());
    };

    switch (c.mode) {
        case ExperimentMode::SingleQ: {
            const AttackSolution s = runner.solve(*c.q);
            const double value = s_of_q(g, s);
            run.curve.add(*c.q, value);
            settle(s, value);
            if (c.trace) run.trace = runner.last_trace();
            break;
        }
        case ExperimentMode::CurveSweep: {
            std::optional<AttackSolution> lowest;
            double lowest_s = 2.0;
            for (std::size_t removed : sweep_grid(c, n)) {
                const AttackSolution s =
                    removed == 0 ? AttackSolution::all_present(n) : runner.solve(removed);
                const double value = s_of_q(g, s);
                run.curve.add(removed, value);
                if (!run.qc && collapsed(g, s, c.collapse)) {
                    run.qc = n == 0 ? 0.0 : static_cast<double>(removed) / static_cast<double>(n);
                    settle(s, value);
                }
                if (removed > 0 && value < lowest_s) {
                    lowest_s = value;
                    lowest = s;
                }
            }
            if (!run.qc && lowest) settle(*lowest, lowest_s);
            if (run.curve.complete()) {
                run.r = robustness_r(run.curve);
            } else if (run.curve.points.front().removed == 0 && run.curve.points.back().removed == n) {
                run.r = robustness_r_interpolated(run.curve);
                run.r_approximate = true;
            }
            break;
        }
        case ExperimentMode::QcSearch: {
            auto result = critical_fraction(
                g, [&](std::size_t removed, const AttackSolution* previous) { return runner.solve(removed, previous); },
                c.collapse);
            run.curve.points = std::move(result.curve.points);
            run.qc = result.qc;
            settle(result.solution, s_of_q(g, result.solution));
            break;
        }
        case ExperimentMode::AlphaScan:
        case ExperimentMode::PopsizeScan:
            break;
    }
    run.seconds_per_generation = runner.seconds_per_generation();
    return run;
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2 || std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); })) return 0.0;
    const double mean = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

nlohmann::json ids_json(const std::vector<NodeId>& ids, bool one_based) {
    auto arr = nlohmann::json::array();
    for (NodeId v : ids) arr.push_back(v + (one_based ? 1 : 0));
    return arr;
}

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

// rethrows the in-flight library error with run context, keeping its type
[[noreturn]] void rethrow_with_context(const std::string& where) {
    try {
        throw;
    } catch (const ParseError& e) {
        throw ParseError(e.line(), where + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(e.field(), where + ": " + e.what());
    }
#define NIPA_RETHROW(T) \
    catch (const T& e) { throw T(where + ": " + e.what()); }
    NIPA_RETHROW(InvalidNode) NIPA_RETHROW(InvalidEdge) NIPA_RETHROW(EmptyGraph) NIPA_RETHROW(InvalidSpec)
    NIPA_RETHROW(InvalidInput) NIPA_RETHROW(InvalidCurve) NIPA_RETHROW(InvalidQ) NIPA_RETHROW(NoMutationPossible)
    NIPA_RETHROW(TooLarge) NIPA_RETHROW(IoError) NIPA_RETHROW(Error)
#undef NIPA_RETHROW
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    ExperimentReport report;
    report.config = config;

    for (std::size_t r = 0; r < config.repeats; ++r) {
        const std::uint64_t repeat_seed = config.seed + r;
        const std::string where = "repeat " + std::to_string(r) + " (seed " + std::to_string(repeat_seed) + ")";
        NetworkSpec spec = config.network;
        spec.seed = repeat_seed;
        Graph g;
        try {
            g = build_network(spec);
        } catch (const Error&) {
            rethrow_with_context(where + ", building network");
        }
        if (r == 0) report.node_count = g.node_count();

        if (is_scan(config.mode)) {
            const bool alpha = config.mode == ExperimentMode::AlphaScan;
            const std::size_t values = alpha ? config.alpha_values.size() : config.pop_sizes.size();
            for (std::size_t i = 0; i < values; ++i) {
                ExperimentConfig local = config;
                if (alpha) local.nipa.alpha = config.alpha_values[i];
                else local.nipa.population_size = config.pop_sizes[i];
                try {
                    StrategyRunner runner(g, local, StrategyKind::NIPA,
                                          derive_seed(repeat_seed, {strategy_stream(StrategyKind::NIPA)}));
                    auto result = critical_fraction(
                        g, [&](std::size_t q, const AttackSolution* prev) { return runner.solve(q, prev); },
                        local.collapse);
                    report.scan.push_back({repeat_seed,
                                           alpha ? config.alpha_values[i] : static_cast<double>(config.pop_sizes[i]),
                                           result.qc, result.removed});
                } catch (const Error&) {
                    rethrow_with_context(where + ", NIPA scan");
                }
            }
            continue;
        }

        for (StrategyKind kind : config.strategies) {
            try {
                report.runs.push_back(run_strategy(g, config, kind, repeat_seed));
            } catch (const Error&) {
                rethrow_with_context(where + ", strategy " + to_string(kind));
            }
        }
    }

    std::stable_sort(report.runs.begin(), report.runs.end(), [](const RunRecord& a, const RunRecord& b) {
        const auto an = to_string(a.strategy), bn = to_string(b.strategy);
        return an != bn ? an < bn : a.seed < b.seed;
    });
    return report;
}

std::vector<std::pair<StrategyKind, StrategySummary>> summarize(const ExperimentReport& report) {
    std::vector<std::pair<StrategyKind, StrategySummary>> out;
    for (std::size_t i = 0; i < report.runs.size();) {
        const StrategyKind kind = report.runs[i].strategy;
        std::vector<double> rs, qcs;
        const RunRecord* best = nullptr;
        for (; i < report.runs.size() && report.runs[i].strategy == kind; ++i) {
            const RunRecord& run = report.runs[i];
            if (run.r) rs.push_back(*run.r);
            if (run.qc) qcs.push_back(*run.qc);
            // smallest collapsing set wins; otherwise lowest S; earlier seed on ties
            auto key = [](const RunRecord& x) {
                return std::make_tuple(x.qc ? 0 : 1, x.qc.value_or(0.0), x.best_s);
            };
            if (best == nullptr || key(run) < key(*best)) best = &run;
        }
        StrategySummary s;
        if (!rs.empty()) {
            s.r_mean = mean_of(rs);
            s.r_std = sample_std(rs);
        }
        if (!qcs.empty()) {
            s.qc_mean = mean_of(qcs);
            s.qc_std = sample_std(qcs);
        }
        s.best_s = best->best_s;
        s.best_attack_set = best->best_attack_set;
        out.emplace_back(kind, std::move(s));
    }
    return out;
}

void emit_csv(const ExperimentReport& report, std::ostream& out) {
    std::vector<AttackCurve> curves;
    curves.reserve(report.runs.size());
    for (const auto& run : report.runs) curves.push_back(run.curve);
    write_curves_csv(curves, out);
}

void emit_summary_json(const ExperimentReport& report, std::ostream& out) {
    const bool one_based = report.config.network.one_based;
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [kind, s] : summarize(report)) {
        j[to_string(kind)] = {
            {"R_mean", optional_json(s.r_mean)},   {"R_std", optional_json(s.r_std)},
            {"qc_mean", optional_json(s.qc_mean)}, {"qc_std", optional_json(s.qc_std)},
            {"best_attack_set", ids_json(s.best_attack_set, one_based)}, {"best_S", s.best_s},
        };
    }
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing summary JSON");
}

void emit_report_json(const ExperimentReport& report, std::ostream& out) {
    const bool one_based = report.config.network.one_based;
    nlohmann::json config = nlohmann::json::object();
    std::istringstream lines(to_config_text(report.config));
    std::string line;
    while (std::getline(lines, line)) {
        const auto eq = line.find('=');
        config[line.substr(0, eq)] = line.substr(eq + 1);
    }
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& run : report.runs) {
        runs.push_back({
            {"strategy", to_string(run.strategy)},
            {"seed", run.seed},
            {"R", optional_json(run.r)},
            {"R_approximate", run.r_approximate},
            {"qc", optional_json(run.qc)},
            {"best_attack_set", ids_json(run.best_attack_set, one_based)},
            {"best_S", run.best_s},
            {"best_kappa", run.best_kappa},
        });
    }
    nlohmann::json scan = nlohmann::json::array();
    for (const auto& s : report.scan) {
        scan.push_back({{"seed", s.seed}, {"parameter", s.parameter}, {"qc", s.qc}, {"attack_size", s.attack_size}});
    }
    nlohmann::json j = {{"version", report.version}, {"config", config}, {"N", report.node_count},
                        {"runs", runs},             {"scan", scan}};
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing report JSON");
}

void emit_scan_csv(const ExperimentReport& report, std::ostream& out) {
    const bool alpha = report.config.mode == ExperimentMode::AlphaScan;
    out << "seed," << (alpha ? "alpha" : "pop_size") << ",qc,Q\n";
    for (const auto& s : report.scan) out << fmt::format("{},{},{},{}\n", s.seed, s.parameter, s.qc, s.attack_size);
    if (!out) throw IoError("failed writing scan CSV");
}

void emit_timing_csv(const ExperimentReport& report, std::ostream& out) {
    out << "strategy,seed,seconds_per_generation\n";
    for (const auto& run : report.runs) {
        out << fmt::format("{},{},{}\n", to_string(run.strategy), run.seed, run.seconds_per_generation);
    }
    if (!out) throw IoError("failed writing timing CSV");
}

void emit_trace_csv(const RunRecord& run, std::ostream& out) {
    out << "iteration,best_S\n";
    for (std::size_t i = 0; i < run.trace.size(); ++i) out << fmt::format("{},{}\n", i, run.trace[i]);
    if (!out) throw IoError("failed writing trace CSV");
}

std::vector<std::filesystem::path> write_outputs(const ExperimentReport& report) {
    namespace fs = std::filesystem;
    const fs::path dir = report.config.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

    std::vector<fs::path> written;
    auto write = [&](const fs::path& name, auto&& emit) {
        const fs::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        emit(out);
        written.push_back(path);
    };

    const bool scan = is_scan(report.config.mode);
    if (report.config.csv) {
        if (scan) {
            write("scan.csv", [&](std::ostream& o) { emit_scan_csv(report, o); });
        } else {
            write("curves.csv", [&](std::ostream& o) { emit_csv(report, o); });
            write("timing.csv", [&](std::ostream& o) { emit_timing_csv(report, o); });
        }
    }
    if (report.config.json) {
        if (!scan) write("summary.json", [&](std::ostream& o) { emit_summary_json(report, o); });
        write("report.json", [&](std::ostream& o) { emit_report_json(report, o); });
    }
    if (report.config.trace) {
        for (const auto& run : report.runs) {
            if (run.trace.empty()) continue;
            write(fmt::format("trace_{}_{}.csv", to_string(run.strategy), run.seed),
                  [&](std::ostream& o) { emit_trace_csv(run, o); });
        }
    }
    return written;
}

}  // namespace nipa
