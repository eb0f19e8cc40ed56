#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "nipa/graph.hpp"

namespace nipa {

class AttackSolution;

/// (node, score) pairs, score descending, ties by ascending node id.
using RankedNodes = std::vector<std::pair<NodeId, double>>;

/// Attack node -> P_j. Defined exactly on the attack set; values need not sum to 1.
using ProbabilityVector = std::map<NodeId, double>;

RankedNodes degree_ranking(const Graph& g);

/// Exact unweighted shortest-path betweenness (Brandes), each unordered
/// pair counted once.
std::vector<double> betweenness_scores(const Graph& g);
/// Betweenness on the subgraph of unmasked nodes; masked nodes score 0.
std::vector<double> betweenness_scores(const Graph& g, const NodeMask& mask);
RankedNodes betweenness(const Graph& g);

/// For every node u adjacent to at least one attack node, 1 / (number of
/// attack nodes adjacent to u) in the original graph. Attack nodes adjacent to
/// other attack nodes receive a ratio as well.
std::map<NodeId, double> contribution_ratios(const Graph& g, std::span<const NodeId> attack_set);

/// Importance of each attack node: sum over its neighbours outside the
/// post-attack largest cluster of (contribution ratio x original degree).
std::map<NodeId, double> importance_measure(const Graph& g, const AttackSolution& solution);

/// P_j = IM_j / N for each attack node j.
ProbabilityVector attack_probabilities(const Graph& g, const AttackSolution& solution);

}  // namespace nipa
