#include "nipa/attack_solution.hpp"

#include <string>

#include "nipa/error.hpp"

namespace nipa {

AttackSolution AttackSolution::from_attack_set(std::size_t n, std::span<const NodeId> attacked) {
    AttackSolution s(n);
    for (NodeId v : attacked) {
        if (v >= n) throw InvalidNode("attack node " + std::to_string(v) + " out of range");
        if (s.present(v)) s.attack(v);
    }
    return s;
}

void AttackSolution::attack(NodeId v) {
    if (bits_[v] != 0) {
        bits_[v] = 0;
        ++attacked_;
    }
}

void AttackSolution::restore(NodeId v) {
    if (bits_[v] == 0) {
        bits_[v] = 1;
        --attacked_;
    }
}

std::vector<NodeId> AttackSolution::attack_nodes() const {
    std::vector<NodeId> out;
    out.reserve(attacked_);
    for (NodeId v = 0; v < bits_.size(); ++v) {
        if (bits_[v] == 0) out.push_back(v);
    }
    return out;
}

NodeMask AttackSolution::mask() const {
    NodeMask m(bits_.size());
    for (NodeId v = 0; v < bits_.size(); ++v) {
        if (bits_[v] == 0) m.remove(v);
    }
    return m;
}

}  // namespace nipa
