#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nipa {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Per-node removal flags; true means the node is logically removed.
class NodeMask {
public:
    NodeMask() = default;
    explicit NodeMask(std::size_t n) : removed_(n, 0) {}
    NodeMask(std::size_t n, std::span<const NodeId> removed_nodes);

    std::size_t size() const noexcept { return removed_.size(); }
    bool removed(NodeId v) const { return removed_[v] != 0; }
    void remove(NodeId v) { removed_[v] = 1; }
    void restore(NodeId v) { removed_[v] = 0; }
    std::size_t removed_count() const noexcept;

    friend bool operator==(const NodeMask&, const NodeMask&) = default;

private:
    std::vector<std::uint8_t> removed_;
};

/// Immutable undirected simple graph stored as sorted adjacency (CSR).
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    /// Neighbors of v in ascending id order, ignoring any mask.
    std::span<const NodeId> adjacent(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    bool has_edge(NodeId u, NodeId v) const;

    /// Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Builds a graph; duplicate edges collapse, self-loops and out-of-range ids throw.
Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

std::size_t degree(const Graph& g, NodeId v);
std::size_t degree(const Graph& g, NodeId v, const NodeMask& mask);

std::vector<NodeId> neighbors(const Graph& g, NodeId v);
std::vector<NodeId> neighbors(const Graph& g, NodeId v, const NodeMask& mask);

/// Largest component among unmasked nodes, sorted ascending. Ties go to the
/// component holding the smallest node id; empty when everything is masked.
std::vector<NodeId> largest_connected_cluster(const Graph& g, const NodeMask& mask);

/// <k^2>/<k> over unmasked nodes using mask-respecting degrees; 0 when no edge survives.
double kappa(const Graph& g, const NodeMask& mask);

/// Reusable BFS workspace for repeated largest-cluster size queries.
class ClusterScanner {
public:
    explicit ClusterScanner(std::size_t n = 0) { reserve(n); }

    std::size_t largest_size(const Graph& g, const NodeMask& mask);

private:
    void reserve(std::size_t n);

    std::vector<std::uint32_t> stamp_;
    std::vector<NodeId> queue_;
    std::uint32_t epoch_ = 0;
};

}  // namespace nipa
