#include "nipa/centrality.hpp"

#include <algorithm>
#include <string>

#include "nipa/attack_solution.hpp"
#include "nipa/error.hpp"

namespace nipa {

namespace {

RankedNodes rank_scores(const std::vector<double>& scores) {
    RankedNodes ranked;
    ranked.reserve(scores.size());
    for (NodeId v = 0; v < scores.size(); ++v) ranked.emplace_back(v, scores[v]);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return ranked;
}

void check_solution(const Graph& g, const AttackSolution& solution) {
    if (solution.size() != g.node_count()) {
        throw InvalidInput("solution length " + std::to_string(solution.size()) +
                           " does not match node count " + std::to_string(g.node_count()));
    }
    if (solution.attack_count() == 0) throw InvalidInput("solution has no attack nodes");
}

}  // namespace

RankedNodes degree_ranking(const Graph& g) {
    std::vector<double> scores(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = static_cast<double>(g.adjacent(v).size());
    return rank_scores(scores);
}

std::vector<double> betweenness_scores(const Graph& g) { return betweenness_scores(g, NodeMask(g.node_count())); }

std::vector<double> betweenness_scores(const Graph& g, const NodeMask& mask) {
    const std::size_t n = g.node_count();
    if (mask.size() != n) throw InvalidInput("mask length does not match node count");
    std::vector<double> centrality(n, 0.0);
    std::vector<NodeId> order;
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    order.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        if (mask.removed(s)) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            NodeId v = order[head];
            for (NodeId w : g.adjacent(v)) {
                if (mask.removed(w)) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }
        // predecessors of w are the neighbours one level closer to s
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId v : g.adjacent(w)) {
                if (!mask.removed(v) && dist[v] >= 0 && dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) centrality[w] += delta[w];
        }
    }
    // every unordered pair was accumulated from both endpoints
    for (double& c : centrality) c /= 2.0;
    return centrality;
}

RankedNodes betweenness(const Graph& g) { return rank_scores(betweenness_scores(g)); }

std::map<NodeId, double> contribution_ratios(const Graph& g, std::span<const NodeId> attack_set) {
    if (attack_set.empty()) throw InvalidInput("empty attack set");
    std::map<NodeId, std::size_t> touching;
    std::vector<NodeId> unique(attack_set.begin(), attack_set.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (NodeId j : unique) {
        if (j >= g.node_count()) throw InvalidNode("attack node " + std::to_string(j) + " out of range");
        for (NodeId u : g.adjacent(j)) ++touching[u];
    }
    std::map<NodeId, double> ratios;
    for (auto [u, count] : touching) ratios.emplace(u, 1.0 / static_cast<double>(count));
    return ratios;
}

std::map<NodeId, double> importance_measure(const Graph& g, const AttackSolution& solution) {
    check_solution(g, solution);
    const std::size_t n = g.node_count();
    const std::vector<NodeId> attack = solution.attack_nodes();

    // largest cluster once all Q attack nodes are gone
    std::vector<std::uint8_t> in_cluster(n, 0);
    for (NodeId v : largest_connected_cluster(g, solution.mask())) in_cluster[v] = 1;

    // Omega: neighbour lists of each attack node with cluster members zeroed
    // out; the multiplicity of a node across all lists is |v| in C = 1/|v|
    std::vector<std::uint32_t> frequency(n, 0);
    for (NodeId j : attack) {
        for (NodeId u : g.adjacent(j)) {
            if (!in_cluster[u]) ++frequency[u];
        }
    }

    std::map<NodeId, double> im;
    for (NodeId j : attack) {
        double sum = 0.0;
        for (NodeId u : g.adjacent(j)) {
            if (in_cluster[u]) continue;
            const double ratio = 1.0 / static_cast<double>(frequency[u]);
            sum += ratio * static_cast<double>(g.adjacent(u).size());
        }
        im.emplace(j, sum);
    }
    return im;
}

ProbabilityVector attack_probabilities(const Graph& g, const AttackSolution& solution) {
    ProbabilityVector p = importance_measure(g, solution);
    const auto n = static_cast<double>(g.node_count());
    for (auto& [node, value] : p) value /= n;
    return p;
}

}  // namespace nipa
