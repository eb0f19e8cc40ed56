#include "nipa/graph.hpp"

#include <algorithm>
#include <string>

#include "nipa/error.hpp"

namespace nipa {

namespace {

void check_node(const Graph& g, NodeId v) {
    if (v >= g.node_count()) {
        throw InvalidNode("node " + std::to_string(v) + " out of range [0, " +
                          std::to_string(g.node_count()) + ")");
    }
}

void check_mask(const Graph& g, const NodeMask& mask) {
    if (mask.size() != g.node_count()) {
        throw InvalidInput("mask length " + std::to_string(mask.size()) +
                           " does not match node count " + std::to_string(g.node_count()));
    }
}

}  // namespace

NodeMask::NodeMask(std::size_t n, std::span<const NodeId> removed_nodes) : removed_(n, 0) {
    for (NodeId v : removed_nodes) {
        if (v >= n) throw InvalidNode("masked node " + std::to_string(v) + " out of range");
        removed_[v] = 1;
    }
}

std::size_t NodeMask::removed_count() const noexcept {
    return static_cast<std::size_t>(std::count(removed_.begin(), removed_.end(), std::uint8_t{1}));
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(*this, u);
    check_node(*this, v);
    auto adj = adjacent(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : adjacent(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    if (n > 0xffffffffu) throw InvalidInput("node count exceeds 32-bit id space");

    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InvalidNode("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw InvalidEdge("self-loop on node " + std::to_string(u));
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    g.targets_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        ++g.offsets_[u + 1];
        g.targets_.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    return g;
}

std::size_t degree(const Graph& g, NodeId v) {
    check_node(g, v);
    return g.adjacent(v).size();
}

std::size_t degree(const Graph& g, NodeId v, const NodeMask& mask) {
    check_node(g, v);
    check_mask(g, mask);
    if (mask.removed(v)) return 0;
    auto adj = g.adjacent(v);
    return static_cast<std::size_t>(
        std::count_if(adj.begin(), adj.end(), [&](NodeId u) { return !mask.removed(u); }));
}

std::vector<NodeId> neighbors(const Graph& g, NodeId v) {
    check_node(g, v);
    auto adj = g.adjacent(v);
    return {adj.begin(), adj.end()};
}

std::vector<NodeId> neighbors(const Graph& g, NodeId v, const NodeMask& mask) {
    check_node(g, v);
    check_mask(g, mask);
    std::vector<NodeId> out;
    if (mask.removed(v)) return out;
    for (NodeId u : g.adjacent(v)) {
        if (!mask.removed(u)) out.push_back(u);
    }
    return out;
}

std::vector<NodeId> largest_connected_cluster(const Graph& g, const NodeMask& mask) {
    check_mask(g, mask);
    const std::size_t n = g.node_count();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<NodeId> best;
    std::vector<NodeId> component;

    for (NodeId root = 0; root < n; ++root) {
        if (seen[root] || mask.removed(root)) continue;
        component.clear();
        component.push_back(root);
        seen[root] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (NodeId u : g.adjacent(component[head])) {
                if (!seen[u] && !mask.removed(u)) {
                    seen[u] = 1;
                    component.push_back(u);
                }
            }
        }
        // roots are visited in ascending order, so strict > keeps the smallest-id tie
        if (component.size() > best.size()) best = component;
    }
    std::sort(best.begin(), best.end());
    return best;
}

double kappa(const Graph& g, const NodeMask& mask) {
    check_mask(g, mask);
    if (mask.removed_count() == g.node_count()) {
        throw EmptyGraph("kappa undefined: every node is masked");
    }
    std::uint64_t sum_k = 0;
    std::uint64_t sum_k2 = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (mask.removed(v)) continue;
        std::uint64_t k = 0;
        for (NodeId u : g.adjacent(v)) k += mask.removed(u) ? 0 : 1;
        sum_k += k;
        sum_k2 += k * k;
    }
    if (sum_k == 0) return 0.0;
    // the 1/n factors of both moments cancel
    return static_cast<double>(sum_k2) / static_cast<double>(sum_k);
}

void ClusterScanner::reserve(std::size_t n) {
    if (stamp_.size() < n) {
        stamp_.assign(n, 0);
        epoch_ = 0;
    }
    queue_.reserve(n);
}

std::size_t ClusterScanner::largest_size(const Graph& g, const NodeMask& mask) {
    check_mask(g, mask);
    const std::size_t n = g.node_count();
    reserve(n);
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }

    std::size_t best = 0;
    std::size_t unvisited = n - mask.removed_count();
    for (NodeId root = 0; root < n && unvisited > best; ++root) {
        if (stamp_[root] == epoch_ || mask.removed(root)) continue;
        queue_.clear();
        queue_.push_back(root);
        stamp_[root] = epoch_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            for (NodeId u : g.adjacent(queue_[head])) {
                if (stamp_[u] != epoch_ && !mask.removed(u)) {
                    stamp_[u] = epoch_;
                    queue_.push_back(u);
                }
            }
        }
        best = std::max(best, queue_.size());
        unvisited -= queue_.size();
    }
    return best;
}

}  // namespace nipa
