#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nipa/attack_solution.hpp"
#include "nipa/graph.hpp"
#include "nipa/rng.hpp"

namespace nipa::test {

/// Builds from 1-based pairs.
inline Graph one_based(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u - 1, v - 1);
    return from_edge_list(n, edges);
}

/// Reconstruction of the 16-node worked example: attacking {1, 2} leaves
/// {4, 13, 14, 15, 16} as the largest cluster.
inline Graph fixture_f1() {
    return one_based(16, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {2, 7}, {2, 8},
                          {3, 9}, {5, 10}, {5, 11}, {5, 12}, {4, 13}, {4, 14}, {4, 15}, {13, 16}});
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return from_edge_list(leaves + 1, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return from_edge_list(n, edges);
}

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

inline AttackSolution attack(std::size_t n, std::initializer_list<int> one_based_ids) {
    std::vector<NodeId> ids;
    for (int v : one_based_ids) ids.push_back(static_cast<NodeId>(v - 1));
    return AttackSolution::from_attack_set(n, ids);
}

inline AttackSolution random_solution(Rng& rng, std::size_t n, std::size_t q) {
    std::vector<NodeId> ids(n);
    for (NodeId v = 0; v < n; ++v) ids[v] = v;
    for (std::size_t i = 0; i < q; ++i) std::swap(ids[i], ids[i + rng.below(n - i)]);
    ids.resize(q);
    return AttackSolution::from_attack_set(n, ids);
}

inline Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return from_edge_list(g.node_count(), edges);
}

inline std::vector<NodeId> random_permutation(Rng& rng, std::size_t n) {
    std::vector<NodeId> perm(n);
    for (NodeId v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

/// Recursive DFS component search; independent of the library's BFS.
inline std::vector<NodeId> dfs_largest_cluster(const Graph& g, const NodeMask& mask) {
    const std::size_t n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<NodeId>> comps;
    auto visit = [&](auto&& self, NodeId v, int id) -> void {
        comp[v] = id;
        comps[id].push_back(v);
        for (NodeId u = 0; u < n; ++u)
            if (!mask.removed(u) && comp[u] < 0 && g.has_edge(v, u)) self(self, u, id);
    };
    for (NodeId v = 0; v < n; ++v) {
        if (mask.removed(v) || comp[v] >= 0) continue;
        comps.emplace_back();
        visit(visit, v, static_cast<int>(comps.size() - 1));
    }
    std::vector<NodeId> best;
    for (auto& c : comps) {
        std::sort(c.begin(), c.end());
        if (c.size() > best.size() || (c.size() == best.size() && !c.empty() && c.front() < best.front())) best = c;
    }
    return best;
}

/// Importance measure straight from the definitions on a dense matrix:
/// A~ is A with the rows/columns of the post-attack largest cluster zeroed,
/// C from the original A, k from the original A.
inline std::map<NodeId, double> naive_importance(const Graph& g, const AttackSolution& s) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;

    const auto attack = s.attack_nodes();
    const auto cluster = dfs_largest_cluster(g, s.mask());
    auto reduced = a;
    for (NodeId c : cluster)
        for (NodeId i = 0; i < n; ++i) reduced[c][i] = reduced[i][c] = 0;

    std::map<NodeId, double> im;
    for (NodeId j : attack) {
        double sum = 0.0;
        for (NodeId t = 0; t < n; ++t) {
            if (!reduced[j][t]) continue;
            int touching = 0;
            for (NodeId i : attack) touching += a[t][i];
            int degree = 0;
            for (NodeId i = 0; i < n; ++i) degree += a[t][i];
            const double ratio = 1.0 / static_cast<double>(touching);
            sum += ratio * static_cast<double>(degree);
        }
        im[j] = sum;
    }
    return im;
}

}  // namespace nipa::test
