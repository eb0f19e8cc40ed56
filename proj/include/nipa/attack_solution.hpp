#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nipa/graph.hpp"

namespace nipa {

/// Length-N binary string: 1 = node present, 0 = node attacked (removed).
class AttackSolution {
public:
    AttackSolution() = default;

    static AttackSolution all_present(std::size_t n) { return AttackSolution(n); }
    /// Throws InvalidNode for ids >= n; duplicates are ignored.
    static AttackSolution from_attack_set(std::size_t n, std::span<const NodeId> attacked);

    std::size_t size() const noexcept { return bits_.size(); }
    /// Q, the number of zeros.
    std::size_t attack_count() const noexcept { return attacked_; }

    bool present(NodeId v) const { return bits_[v] != 0; }
    bool attacked(NodeId v) const { return bits_[v] == 0; }
    void attack(NodeId v);
    void restore(NodeId v);

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    /// Attacked ids in ascending order.
    std::vector<NodeId> attack_nodes() const;
    NodeMask mask() const;

    friend bool operator==(const AttackSolution&, const AttackSolution&) = default;

private:
    explicit AttackSolution(std::size_t n) : bits_(n, 1) {}

    std::vector<std::uint8_t> bits_;
    std::size_t attacked_ = 0;
};

}  // namespace nipa
