#include "nipa/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <string>
#include <thread>

#include "nipa/error.hpp"
#include "nipa/metrics.hpp"

namespace nipa {

namespace {

struct Candidate {
    AttackSolution solution;
    double s = 1.0;
    NodeId restored = 0;
    NodeId attacked = 0;
};

using CandidateFactory = std::function<Candidate(std::size_t index)>;

// Candidates are built and scored independently, so any thread count yields
// the same population. The winner is the lowest S, ties by lowest index.
Candidate best_of_population(const Graph& g, std::size_t count, unsigned threads, const CandidateFactory& make) {
    std::vector<Candidate> population(count);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            population[i] = make(i);
            population[i].s = s_of_q(g, population[i].solution);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        work(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < count; ++i) {
        if (population[i].s < population[best].s) best = i;
    }
    return std::move(population[best]);
}

AttackSolution top_of_ranking(const Graph& g, const RankedNodes& ranking, std::size_t removed) {
    AttackSolution s = AttackSolution::all_present(g.node_count());
    for (std::size_t i = 0; i < removed; ++i) s.attack(ranking[i].first);
    return s;
}

void split_nodes(const AttackSolution& s, std::vector<NodeId>& attacked, std::vector<NodeId>& present) {
    attacked.clear();
    present.clear();
    for (NodeId v = 0; v < s.size(); ++v) (s.present(v) ? present : attacked).push_back(v);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void NipaParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidSpec("alpha must lie in (0, 1)");
    if (population_size == 0) throw InvalidSpec("population size must be positive");
    if (max_iterations == 0) throw InvalidSpec("iteration count must be positive");
}

void OasParams::validate() const {
    if (population_size == 0) throw InvalidSpec("population size must be positive");
    if (max_iterations == 0) throw InvalidSpec("iteration count must be positive");
}

void validate_q(const Graph& g, std::size_t removed) {
    if (removed == 0 || removed > g.node_count()) {
        throw InvalidQ("Q = " + std::to_string(removed) + " outside (0, " + std::to_string(g.node_count()) + "]");
    }
}

AttackSolution hdf_attack(const Graph& g, std::size_t removed) {
    validate_q(g, removed);
    return top_of_ranking(g, degree_ranking(g), removed);
}

std::vector<NodeId> adaptive_betweenness_order(const Graph& g, std::size_t count) {
    count = std::min(count, g.node_count());
    std::vector<NodeId> order;
    order.reserve(count);
    NodeMask mask(g.node_count());
    for (std::size_t step = 0; step < count; ++step) {
        const auto scores = betweenness_scores(g, mask);
        NodeId pick = 0;
        double top = -1.0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!mask.removed(v) && scores[v] > top) {
                top = scores[v];
                pick = v;
            }
        }
        mask.remove(pick);
        order.push_back(pick);
    }
    return order;
}

AttackSolution hbf_attack(const Graph& g, std::size_t removed, bool adaptive) {
    validate_q(g, removed);
    if (!adaptive) return top_of_ranking(g, betweenness(g), removed);
    const auto order = adaptive_betweenness_order(g, removed);
    return AttackSolution::from_attack_set(g.node_count(), order);
}

OptimizeResult oas_optimize(const Graph& g, std::size_t removed, const OasParams& params) {
    validate_q(g, removed);
    params.validate();
    const std::size_t n = g.node_count();

    // random removal of Q nodes from the all-ones string
    Rng init(derive_seed(params.seed, {stream::init}));
    std::vector<NodeId> ids(n);
    for (NodeId v = 0; v < n; ++v) ids[v] = v;
    for (std::size_t i = 0; i < removed; ++i) std::swap(ids[i], ids[i + init.below(n - i)]);

    OptimizeResult result;
    result.solution = AttackSolution::from_attack_set(n, std::span(ids).first(removed));
    result.s = s_of_q(g, result.solution);
    result.trace.push_back(result.s);
    if (removed == n) return result;

    std::deque<NodeId> tabu;
    std::vector<NodeId> attacked, present;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t it = 0; it < params.max_iterations; ++it) {
        split_nodes(result.solution, attacked, present);
        auto is_tabu = [&](NodeId v) { return std::find(tabu.begin(), tabu.end(), v) != tabu.end(); };

        Candidate best = best_of_population(g, params.population_size, params.threads, [&](std::size_t i) {
            Rng rng(derive_seed(params.seed, {stream::candidate, it, i}));
            NodeId out = 0, in = 0;
            for (int attempt = 0; attempt <= 10; ++attempt) {
                out = attacked[rng.below(attacked.size())];
                in = present[rng.below(present.size())];
                if (!is_tabu(out) && !is_tabu(in)) break;
            }
            Candidate c{result.solution, 1.0, out, in};
            c.solution.restore(out);
            c.solution.attack(in);
            return c;
        });

        if (best.s < result.s) {
            result.solution = std::move(best.solution);
            result.s = best.s;
            for (NodeId v : {best.restored, best.attacked}) {
                tabu.push_back(v);
                if (tabu.size() > params.tabu_length) tabu.pop_front();
            }
        }
        result.trace.push_back(result.s);
    }
    result.seconds_per_generation = elapsed_seconds(start) / static_cast<double>(params.max_iterations);
    return result;
}

AttackSolution nipa_initialize(const Graph& g, std::size_t removed) { return hdf_attack(g, removed); }

std::vector<NodeId> nipa_reserve(const ProbabilityVector& probabilities, double alpha, std::size_t removed) {
    if (probabilities.size() != removed) {
        throw InvalidInput("probability vector covers " + std::to_string(probabilities.size()) +
                           " nodes, expected Q = " + std::to_string(removed));
    }
    // epsilon guards alpha * Q landing a hair under an integer
    const auto keep = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(removed) + 1e-9));
    std::vector<std::pair<NodeId, double>> ranked(probabilities.begin(), probabilities.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

    std::vector<NodeId> reserved;
    for (std::size_t i = 0; i < std::min(keep, ranked.size()); ++i) reserved.push_back(ranked[i].first);
    std::sort(reserved.begin(), reserved.end());
    return reserved;
}

namespace {

std::vector<NodeId> swappable(const AttackSolution& solution, std::span<const NodeId> reserved) {
    std::vector<std::uint8_t> keep(solution.size(), 0);
    for (NodeId r : reserved) {
        if (r >= solution.size() || solution.present(r)) {
            throw InvalidInput("reserved node " + std::to_string(r) + " is not an attack node");
        }
        keep[r] = 1;
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < solution.size(); ++v) {
        if (solution.attacked(v) && !keep[v]) out.push_back(v);
    }
    if (out.empty()) throw NoMutationPossible("every attack node is reserved");
    if (solution.attack_count() == solution.size()) throw NoMutationPossible("no present node to attack");
    return out;
}

AttackSolution swap_in_present(const AttackSolution& solution, NodeId out, Rng& rng) {
    // draw from the nodes present before the swap
    const std::size_t k = rng.below(solution.size() - solution.attack_count());
    AttackSolution next = solution;
    std::size_t seen = 0;
    for (NodeId v = 0; v < solution.size(); ++v) {
        if (solution.present(v) && seen++ == k) {
            next.attack(v);
            break;
        }
    }
    next.restore(out);
    return next;
}

}  // namespace

AttackSolution nipa_mutate(const AttackSolution& solution, std::span<const NodeId> reserved, Rng& rng) {
    const auto candidates = swappable(solution, reserved);
    const NodeId out = candidates[rng.below(candidates.size())];
    return swap_in_present(solution, out, rng);
}

AttackSolution nipa_mutate_weighted(const AttackSolution& solution, std::span<const NodeId> reserved,
                                    const ProbabilityVector& probabilities, Rng& rng) {
    const auto candidates = swappable(solution, reserved);
    double top = 0.0;
    for (const auto& [node, p] : probabilities) top = std::max(top, p);
    const double floor_weight = 1.0 / static_cast<double>(solution.size());

    std::vector<double> weights;
    weights.reserve(candidates.size());
    double total = 0.0;
    for (NodeId v : candidates) {
        const auto it = probabilities.find(v);
        const double p = it == probabilities.end() ? 0.0 : it->second;
        weights.push_back(top - p + floor_weight);
        total += weights.back();
    }
    double draw = rng.uniform() * total;
    std::size_t pick = candidates.size() - 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (draw < weights[i]) {
            pick = i;
            break;
        }
        draw -= weights[i];
    }
    return swap_in_present(solution, candidates[pick], rng);
}

OptimizeResult nipa_optimize(const Graph& g, std::size_t removed, const NipaParams& params,
                             const AttackSolution* initial) {
    validate_q(g, removed);
    params.validate();

    OptimizeResult result;
    if (initial != nullptr) {
        if (initial->size() != g.node_count() || initial->attack_count() != removed) {
            throw InvalidInput("initial solution does not match N and Q");
        }
        result.solution = *initial;
    } else {
        result.solution = nipa_initialize(g, removed);
    }
    result.s = s_of_q(g, result.solution);
    result.trace.push_back(result.s);
    if (removed == g.node_count()) return result;

    ProbabilityVector probabilities;
    std::vector<NodeId> reserved;
    bool stale = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t it = 0; it < params.max_iterations; ++it) {
        if (stale) {
            probabilities = attack_probabilities(g, result.solution);
            reserved = nipa_reserve(probabilities, params.alpha, removed);
            stale = false;
        }
        Candidate best = best_of_population(g, params.population_size, params.threads, [&](std::size_t i) {
            Rng rng(derive_seed(params.seed, {stream::candidate, it, i}));
            Candidate c;
            c.solution = params.weighted_mutation
                             ? nipa_mutate_weighted(result.solution, reserved, probabilities, rng)
                             : nipa_mutate(result.solution, reserved, rng);
            return c;
        });
        if (best.s < result.s) {
            result.solution = std::move(best.solution);
            result.s = best.s;
            stale = true;
        }
        result.trace.push_back(result.s);
    }
    result.seconds_per_generation = elapsed_seconds(start) / static_cast<double>(params.max_iterations);
    return result;
}

BruteForceResult brute_force_optimum(const Graph& g, std::size_t removed, std::uint64_t cap) {
    validate_q(g, removed);
    const std::size_t n = g.node_count();

    // C(n, Q) built incrementally; every prefix product is itself a binomial
    std::uint64_t combos = 1;
    for (std::size_t i = 1; i <= removed; ++i) {
        const auto next = static_cast<unsigned __int128>(combos) * (n - removed + i) / i;
        if (next > cap) {
            throw TooLarge("C(" + std::to_string(n) + ", " + std::to_string(removed) + ") exceeds cap " +
                           std::to_string(cap));
        }
        combos = static_cast<std::uint64_t>(next);
    }

    std::vector<NodeId> pick(removed);
    for (std::size_t i = 0; i < removed; ++i) pick[i] = static_cast<NodeId>(i);

    ClusterScanner scanner(n);
    BruteForceResult best;
    best.s = std::numeric_limits<double>::infinity();
    while (true) {
        const NodeMask mask(n, pick);
        const double s = static_cast<double>(scanner.largest_size(g, mask)) / static_cast<double>(n);
        if (s < best.s) {
            best.s = s;
            best.solution = AttackSolution::from_attack_set(n, pick);
        }
        // next combination in lexicographic order
        std::size_t i = removed;
        while (i > 0 && pick[i - 1] == n - removed + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < removed; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

}  // namespace nipa
