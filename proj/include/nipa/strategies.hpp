#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nipa/attack_solution.hpp"
#include "nipa/centrality.hpp"
#include "nipa/graph.hpp"
#include "nipa/rng.hpp"

namespace nipa {

struct NipaParams {
    double alpha = 0.3;                // reserved fraction of the attack set
    std::size_t population_size = 100;
    std::size_t max_iterations = 100;
    std::uint64_t seed = 0;
    /// Choose the swapped-out node with weight favouring low attack
    /// probability instead of uniformly.
    bool weighted_mutation = false;
    unsigned threads = 1;

    /// Throws InvalidSpec.
    void validate() const;
};

struct OasParams {
    std::size_t population_size = 100;
    std::size_t max_iterations = 100;
    std::size_t tabu_length = 10;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    void validate() const;
};

struct OptimizeResult {
    AttackSolution solution;
    double s = 1.0;
    /// Incumbent S before the first generation and after each one.
    std::vector<double> trace;
    double seconds_per_generation = 0.0;
};

/// Throws InvalidQ unless 0 < Q <= N.
void validate_q(const Graph& g, std::size_t removed);

/// Top-Q of the static degree ranking.
AttackSolution hdf_attack(const Graph& g, std::size_t removed);

/// Removal order of adaptive HBF: repeatedly take the node with the highest
/// betweenness on the remaining graph, ties by ascending id.
std::vector<NodeId> adaptive_betweenness_order(const Graph& g, std::size_t count);

/// Top-Q of the static betweenness ranking. With `adaptive`, betweenness is
/// recomputed on the remaining graph after every removal.
AttackSolution hbf_attack(const Graph& g, std::size_t removed, bool adaptive = false);

/// Random-swap population search with elitism and a FIFO tabu list.
OptimizeResult oas_optimize(const Graph& g, std::size_t removed, const OasParams& params);

/// Degree-based starting solution.
AttackSolution nipa_initialize(const Graph& g, std::size_t removed);

/// The floor(alpha * Q) attack nodes with highest probability, ties by ascending id.
std::vector<NodeId> nipa_reserve(const ProbabilityVector& probabilities, double alpha, std::size_t removed);

/// One swap: a uniformly chosen non-reserved attack node is restored and a
/// uniformly chosen present node is attacked.
AttackSolution nipa_mutate(const AttackSolution& solution, std::span<const NodeId> reserved, Rng& rng);

/// As nipa_mutate, but the restored node is drawn with weight
/// (max P - P_j + 1/N), so low-importance attack nodes leave first.
AttackSolution nipa_mutate_weighted(const AttackSolution& solution, std::span<const NodeId> reserved,
                                    const ProbabilityVector& probabilities, Rng& rng);

/// Fixed-Q NIPA main loop. `initial` replaces the degree-based start when given.
OptimizeResult nipa_optimize(const Graph& g, std::size_t removed, const NipaParams& params,
                             const AttackSolution* initial = nullptr);

struct BruteForceResult {
    AttackSolution solution;
    double s = 1.0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Exact minimum S over all Q-subsets; ties go to the lexicographically
/// smallest attack set. Throws TooLarge above the cap.
BruteForceResult brute_force_optimum(const Graph& g, std::size_t removed,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace nipa
