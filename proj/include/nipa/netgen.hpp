#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nipa/graph.hpp"

namespace nipa {

enum class NetworkModel { BA, ER, WS, Karate, File };

std::string to_string(NetworkModel model);

/// Generator parameters. `p` is the ER edge probability and the WS rewiring
/// probability; for BA it is parsed and carried but not used.
struct NetworkSpec {
    NetworkModel model = NetworkModel::Karate;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t m0 = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string path;       // File model only
    bool one_based = true;  // File model only

    /// Throws InvalidSpec when the model's parameter constraints fail.
    void validate() const;
};

/// Preferential attachment grown from a path on the first m0 nodes.
Graph generate_ba(std::size_t n, std::size_t m, std::size_t m0, std::uint64_t seed);
Graph generate_er(std::size_t n, double p, std::uint64_t seed);
Graph generate_ws(std::size_t n, std::size_t m, double p, std::uint64_t seed);

/// Zachary's karate club, 34 nodes and 78 edges.
Graph karate();

/// Dispatches on spec.model; File reads spec.path.
Graph build_network(const NetworkSpec& spec);

/// Edge-list text: two ids per line, '#' starts a comment line. A leading
/// "# nodes <N>" comment fixes the node count so isolated tail nodes survive.
Graph read_edge_list(std::istream& in, bool one_based = true);
Graph read_edge_list_file(const std::string& path, bool one_based = true);
void write_edge_list(const Graph& g, std::ostream& out, bool one_based = true);

}  // namespace nipa
