// Acceptance suite: one [PASS]/[FAIL] line per criterion.
// Usage: nipa_acceptance [--criterion N]   (all criteria when N is omitted)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "nipa/centrality.hpp"
#include "nipa/experiment.hpp"
#include "nipa/metrics.hpp"
#include "nipa/netgen.hpp"
#include "nipa/strategies.hpp"

using namespace nipa;
using namespace nipa::test;

namespace {

// ---- pinned tolerances and budgets ---------------------------------------

constexpr double kKarateKappa = 1.9286;
constexpr double kKarateKappaTol = 1e-4;
constexpr double kOneMillisecond = 1e-3;

constexpr double kIm1 = 10.5, kIm2 = 8.5;
constexpr double kP1 = 0.65625, kP2 = 0.53125;

constexpr int kKarateRuns = 10, kKarateMinCollapsed = 8;
constexpr std::size_t kHdfPrefix = 11, kHbfPrefix = 10;

constexpr int kRRepeats = 10;

constexpr std::size_t kScaledN = 100;
constexpr int kScaledRepeats = 5;
constexpr double kWsQcCeiling = 0.55;

constexpr int kOracleGraphs = 50;
constexpr double kNipaHitRate = 0.95, kOasHitRate = 0.85;

constexpr int kEquivalenceInstances = 200;

constexpr double kRTol = 1e-12;
constexpr int kMutationDraws = 10000;

constexpr double kComplexityRatio = 25.0;
constexpr double kComplexityP = 0.05;

constexpr double kMinute = 60.0;

// --------------------------------------------------------------------------

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

Outcome within_budget(Outcome o, double elapsed, double budget) {
    if (elapsed > budget) {
        o.pass = false;
        o.detail += fmt::format("; over budget {:.3g}s", budget);
    }
    return o;
}

Outcome karate_kappa() {
    const Graph g = karate();
    const auto t0 = std::chrono::steady_clock::now();
    const double k = kappa(g, attack(34, {1, 2, 3, 25, 26, 33, 34}).mask());
    const double elapsed = seconds_since(t0);
    Outcome o{std::abs(k - kKarateKappa) <= kKarateKappaTol,
              fmt::format("kappa={:.6f} expected {}±{}", k, kKarateKappa, kKarateKappaTol)};
    return within_budget(o, elapsed, kOneMillisecond);
}

Outcome importance_example() {
    const Graph g = fixture_f1();
    const auto s = attack(16, {1, 2});
    const auto t0 = std::chrono::steady_clock::now();
    const auto im = importance_measure(g, s);
    const auto p = attack_probabilities(g, s);
    const double elapsed = seconds_since(t0);
    const bool ok = im.at(0) == kIm1 && im.at(1) == kIm2 && p.at(0) == kP1 && p.at(1) == kP2;
    Outcome o{ok, fmt::format("IM=({}, {}) P=({}, {})", im.at(0), im.at(1), p.at(0), p.at(1))};
    return within_budget(o, elapsed, kOneMillisecond);
}

std::size_t collapsing_prefix(const Graph& g, const std::function<AttackSolution(std::size_t)>& fn) {
    for (std::size_t q = 1; q <= g.node_count(); ++q)
        if (kappa(g, fn(q).mask()) <= 2.0) return q;
    return g.node_count();
}

Outcome karate_effectiveness() {
    const Graph g = karate();
    const auto t0 = std::chrono::steady_clock::now();
    int collapsed_runs = 0;
    for (int seed = 0; seed < kKarateRuns; ++seed) {
        NipaParams params{.alpha = 0.3, .population_size = 100, .max_iterations = 100,
                          .seed = static_cast<std::uint64_t>(seed)};
        const auto r = nipa_optimize(g, 7, params);
        if (kappa(g, r.solution.mask()) <= 2.0) ++collapsed_runs;
    }
    const auto hdf = collapsing_prefix(g, [&](std::size_t q) { return hdf_attack(g, q); });
    const auto hbf = collapsing_prefix(g, [&](std::size_t q) { return hbf_attack(g, q); });
    const double elapsed = seconds_since(t0);
    Outcome o{collapsed_runs >= kKarateMinCollapsed && hdf == kHdfPrefix && hbf == kHbfPrefix,
              fmt::format("NIPA Q=7 collapsed {}/{} (need {}); HDF prefix {} (expect {}), HBF prefix {} (expect {})",
                          collapsed_runs, kKarateRuns, kKarateMinCollapsed, hdf, kHdfPrefix, hbf, kHbfPrefix)};
    return within_budget(o, elapsed, kMinute);
}

Outcome karate_r_ordering() {
    const auto t0 = std::chrono::steady_clock::now();
    auto config = parse_config(fmt::format(
        "network=karate strategy=nipa,oas,hdf,hbf mode=curve-sweep full_resolution=true "
        "alpha=0.3 pop_size=100 iters=100 repeats={} seed=0",
        kRRepeats));
    const auto summary = summarize(run_experiment(config));
    double nipa = 0.0, others = 1e9;
    std::string detail;
    for (const auto& [kind, s] : summary) {
        const double r = s.r_mean.value_or(1.0);
        detail += fmt::format("{}R({})={:.4f}", detail.empty() ? "" : " ", to_string(kind), r);
        if (kind == StrategyKind::NIPA) nipa = r;
        else others = std::min(others, r);
    }
    return within_budget({nipa < others, detail}, seconds_since(t0), 10 * kMinute);
}

Outcome scaled_ordering() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::string>> models{
        {"WS", fmt::format("network=ws n={} m=4 p=0.5", kScaledN)},
        {"ER", fmt::format("network=er n={} p=0.05", kScaledN)},
        {"BA", fmt::format("network=ba n={} m=3 m0=3", kScaledN)},
    };
    bool pass = true;
    std::string detail;
    for (const auto& [name, network] : models) {
        auto config = parse_config(fmt::format(
            "{} strategy=nipa,oas,hdf,hbf mode=qc-search alpha=0.3 pop_size=50 iters=100 repeats={} seed=0", network,
            kScaledRepeats));
        const auto report = run_experiment(config);
        std::map<StrategyKind, std::vector<double>> qcs;
        for (const auto& run : report.runs) qcs[run.strategy].push_back(run.qc.value_or(1.0));
        const double nipa = median(qcs[StrategyKind::NIPA]);
        detail += fmt::format("{}{}:", detail.empty() ? "" : "; ", name);
        for (const auto& [kind, values] : qcs) {
            const double m = median(values);
            detail += fmt::format(" {}={:.2f}", to_string(kind), m);
            if (nipa > m) pass = false;
        }
        if (name == "WS" && !(nipa < kWsQcCeiling)) pass = false;
    }
    return within_budget({pass, "median qc " + detail}, seconds_since(t0), 15 * kMinute);
}

Outcome oracle_optimality() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(2024);
    int runs = 0, nipa_hits = 0, oas_hits = 0;
    for (int i = 0; i < kOracleGraphs; ++i) {
        const std::size_t n = 6 + rng.below(7);
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        Graph g;
        switch (i % 3) {
            case 0: g = generate_er(n, 0.35, seed); break;
            case 1: g = generate_ws(n, 2 + 2 * rng.below(2), 0.3, seed); break;
            default: g = generate_ba(n, 2, 2, seed); break;
        }
        for (std::size_t q = 1; q <= 3; ++q) {
            const double best = brute_force_optimum(g, q).s;
            NipaParams np{.alpha = 0.3, .population_size = 30, .max_iterations = 200, .seed = seed * 10 + q};
            OasParams op{.population_size = 30, .max_iterations = 200, .tabu_length = 10, .seed = seed * 10 + q};
            nipa_hits += nipa_optimize(g, q, np).s == best;
            oas_hits += oas_optimize(g, q, op).s == best;
            ++runs;
        }
    }
    const double nipa_rate = static_cast<double>(nipa_hits) / runs;
    const double oas_rate = static_cast<double>(oas_hits) / runs;
    Outcome o{nipa_rate >= kNipaHitRate && oas_rate >= kOasHitRate,
              fmt::format("NIPA {}/{} ({:.1f}%, need {}%), OAS {}/{} ({:.1f}%, need {}%)", nipa_hits, runs,
                          100 * nipa_rate, 100 * kNipaHitRate, oas_hits, runs, 100 * oas_rate, 100 * kOasHitRate)};
    return within_budget(o, seconds_since(t0), 5 * kMinute);
}

Outcome importance_equivalence() {
    Rng rng(7);
    int equal = 0;
    for (int i = 0; i < kEquivalenceInstances; ++i) {
        const std::size_t n = 2 + rng.below(40);
        const Graph g = random_graph(rng, n, 0.02 + 0.3 * rng.uniform());
        const auto s = random_solution(rng, n, 1 + rng.below(n));
        equal += importance_measure(g, s) == naive_importance(g, s);
    }
    return {equal == kEquivalenceInstances, fmt::format("{}/{} instances identical", equal, kEquivalenceInstances)};
}

Outcome metric_identities() {
    bool r_ok = true;
    for (std::size_t n = 3; n <= 8; ++n) {
        const Graph g = complete(n);
        AttackCurve curve{"HDF", 0, n, {}};
        for (std::size_t q = 0; q <= n; ++q)
            curve.add(q, q == 0 ? s_of_q(g, AttackSolution::all_present(n)) : s_of_q(g, hdf_attack(g, q)));
        r_ok &= std::abs(robustness_r(curve) - 0.5) <= kRTol;
    }

    Rng rng(8);
    bool bound_ok = true;
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 1 + rng.below(50);
        const Graph g = random_graph(rng, n, rng.uniform());
        const std::size_t q = rng.below(n + 1);
        bound_ok &= s_of_q(g, random_solution(rng, n, q)) <= static_cast<double>(n - q) / static_cast<double>(n);
    }

    bool conserve_ok = true;
    for (int i = 0; i < kMutationDraws; ++i) {
        const std::size_t n = 3 + rng.below(40);
        const std::size_t q = 1 + rng.below(n - 1);
        const auto s = random_solution(rng, n, q);
        conserve_ok &= nipa_mutate(s, {}, rng).attack_count() == q;
    }
    return {r_ok && bound_ok && conserve_ok,
            fmt::format("R(K_n)=0.5: {}, S<=(N-Q)/N: {}, Q conserved over {} mutations: {}", r_ok, bound_ok,
                        kMutationDraws, conserve_ok)};
}

Outcome complexity_smoke() {
    constexpr int samples = 5;
    std::vector<double> per_n;
    std::string detail;
    for (std::size_t n : {100, 200, 400}) {
        std::vector<double> times;
        for (int s = 0; s < samples; ++s) {
            const Graph g = generate_er(n, kComplexityP, 500 + static_cast<std::uint64_t>(s));
            NipaParams params{.alpha = 0.3, .population_size = 100, .max_iterations = 3,
                              .seed = static_cast<std::uint64_t>(s)};
            times.push_back(nipa_optimize(g, n / 10, params).seconds_per_generation);
        }
        per_n.push_back(median(times));
        detail += fmt::format("N={}: {:.3g}s/gen; ", n, per_n.back());
    }
    const double ratio = per_n[2] / per_n[0];
    return {ratio <= kComplexityRatio, detail + fmt::format("ratio(400/100)={:.2f} (limit {})", ratio, kComplexityRatio)};
}

Outcome determinism() {
    const auto config = parse_config(
        "network=er n=60 p=0.08 strategy=nipa,oas,hdf,hbf mode=curve-sweep pop_size=20 iters=20 repeats=3 seed=5 "
        "trace=true");
    auto render = [&] {
        const auto report = run_experiment(config);
        std::ostringstream out;
        emit_csv(report, out);
        emit_summary_json(report, out);
        emit_report_json(report, out);
        for (const auto& run : report.runs) emit_trace_csv(run, out);
        return out.str();
    };
    const std::string a = render(), b = render();
    return {a == b, fmt::format("{} bytes, identical: {}", a.size(), a == b)};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "karate kappa regression", karate_kappa},
    {2, "importance measure worked example", importance_example},
    {3, "karate NIPA effectiveness", karate_effectiveness},
    {4, "R ordering on karate", karate_r_ordering},
    {5, "scaled WS/ER/BA ordering", scaled_ordering},
    {6, "oracle optimality", oracle_optimality},
    {7, "importance measure equivalence", importance_equivalence},
    {8, "metric identities", metric_identities},
    {9, "complexity smoke", complexity_smoke},
    {10, "determinism", determinism},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        fmt::print("[{}] {} {}: {} ({:.2f}s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail, seconds_since(t0));
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
