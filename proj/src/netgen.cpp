#include "nipa/netgen.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "nipa/error.hpp"
#include "nipa/rng.hpp"

namespace nipa {

std::string to_string(NetworkModel model) {
    switch (model) {
        case NetworkModel::BA: return "ba";
        case NetworkModel::ER: return "er";
        case NetworkModel::WS: return "ws";
        case NetworkModel::Karate: return "karate";
        case NetworkModel::File: return "file";
    }
    return "unknown";
}

void NetworkSpec::validate() const {
    auto fail = [](const std::string& msg) { throw InvalidSpec(msg); };
    switch (model) {
        case NetworkModel::BA:
            if (m < 1 || m > m0 || m0 >= n) fail("BA requires 1 <= m <= m0 < n");
            break;
        case NetworkModel::ER:
            if (n < 1) fail("ER requires n >= 1");
            if (!(p >= 0.0 && p <= 1.0)) fail("ER requires 0 <= p <= 1");
            break;
        case NetworkModel::WS:
            if (n < 1) fail("WS requires n >= 1");
            if (m % 2 != 0 || m >= n) fail("WS requires even m with 0 <= m < n");
            if (!(p >= 0.0 && p <= 1.0)) fail("WS requires 0 <= p <= 1");
            break;
        case NetworkModel::Karate:
            break;
        case NetworkModel::File:
            if (path.empty()) fail("file network requires a path");
            break;
    }
}

Graph generate_ba(std::size_t n, std::size_t m, std::size_t m0, std::uint64_t seed) {
    NetworkSpec{.model = NetworkModel::BA, .n = n, .m = m, .m0 = m0}.validate();
    Rng rng(derive_seed(seed, {stream::network}));

    std::vector<Edge> edges;
    edges.reserve((m0 - 1) + m * (n - m0));
    // every edge endpoint appears once here, so a uniform pick is degree-proportional
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (NodeId v = 1; v < m0; ++v) {
        edges.emplace_back(v - 1, v);
        endpoints.push_back(v - 1);
        endpoints.push_back(v);
    }

    std::vector<NodeId> targets;
    for (auto v = static_cast<NodeId>(m0); v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            NodeId t = endpoints.empty() ? static_cast<NodeId>(rng.below(v))
                                         : endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return from_edge_list(n, edges);
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
    NetworkSpec{.model = NetworkModel::ER, .n = n, .p = p}.validate();
    Rng rng(derive_seed(seed, {stream::network}));
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.uniform() < p) edges.emplace_back(u, v);
        }
    }
    return from_edge_list(n, edges);
}

Graph generate_ws(std::size_t n, std::size_t m, double p, std::uint64_t seed) {
    NetworkSpec{.model = NetworkModel::WS, .n = n, .m = m, .p = p}.validate();
    Rng rng(derive_seed(seed, {stream::network}));

    std::vector<std::set<NodeId>> adj(n);
    for (std::size_t k = 1; k <= m / 2; ++k) {
        for (NodeId i = 0; i < n; ++i) {
            auto j = static_cast<NodeId>((i + k) % n);
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    // rewire the far endpoint of each lattice edge, lattice order k-major
    for (std::size_t k = 1; k <= m / 2; ++k) {
        for (NodeId i = 0; i < n; ++i) {
            auto j = static_cast<NodeId>((i + k) % n);
            if (rng.uniform() >= p) continue;
            for (std::size_t attempt = 0; attempt < n; ++attempt) {
                auto w = static_cast<NodeId>(rng.below(n));
                if (w == i || adj[i].contains(w)) continue;
                adj[i].erase(j);
                adj[j].erase(i);
                adj[i].insert(w);
                adj[w].insert(i);
                break;
            }
        }
    }

    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : adj[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return from_edge_list(n, edges);
}

Graph karate() {
    // 1-based, as published
    static constexpr std::array<std::array<int, 2>, 78> kEdges{{
        {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},
        {1, 11},  {1, 12},  {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},
        {2, 3},   {2, 4},   {2, 8},   {2, 14},  {2, 18},  {2, 20},  {2, 22},  {2, 31},
        {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},  {3, 29},  {3, 33},
        {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
        {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34},
        {16, 33}, {16, 34}, {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33},
        {23, 34}, {24, 26}, {24, 28}, {24, 30}, {24, 33}, {24, 34}, {25, 26}, {25, 28},
        {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32}, {29, 34}, {30, 33},
        {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34},
    }};
    std::vector<Edge> edges;
    edges.reserve(kEdges.size());
    for (auto [u, v] : kEdges) edges.emplace_back(u - 1, v - 1);
    return from_edge_list(34, edges);
}

Graph build_network(const NetworkSpec& spec) {
    spec.validate();
    switch (spec.model) {
        case NetworkModel::BA: return generate_ba(spec.n, spec.m, spec.m0, spec.seed);
        case NetworkModel::ER: return generate_er(spec.n, spec.p, spec.seed);
        case NetworkModel::WS: return generate_ws(spec.n, spec.m, spec.p, spec.seed);
        case NetworkModel::Karate: return karate();
        case NetworkModel::File: return read_edge_list_file(spec.path, spec.one_based);
    }
    throw InvalidSpec("unknown network model");
}

}  // namespace nipa
