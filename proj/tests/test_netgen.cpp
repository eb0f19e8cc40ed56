#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "nipa/error.hpp"
#include "nipa/netgen.hpp"

using namespace nipa;
using namespace nipa::test;

namespace {

bool simple(const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto adj = g.adjacent(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] == v) return false;
            if (i > 0 && adj[i] == adj[i - 1]) return false;
            if (!g.has_edge(adj[i], v)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("BA") {
    Graph tree = generate_ba(4, 1, 1, 99);
    CHECK(tree.edge_count() == 3);
    CHECK(largest_connected_cluster(tree, NodeMask(4)).size() == 4);

    Graph g = generate_ba(300, 3, 3, 7);
    CHECK(g.edge_count() == 893);
    CHECK(simple(g));
    CHECK(largest_connected_cluster(g, NodeMask(300)).size() == 300);
    CHECK(g == generate_ba(300, 3, 3, 7));
    CHECK_FALSE(g == generate_ba(300, 3, 3, 8));

    CHECK_THROWS_AS(generate_ba(10, 4, 3, 0), InvalidSpec);
    CHECK_THROWS_AS(generate_ba(3, 1, 3, 0), InvalidSpec);
    CHECK_THROWS_AS(generate_ba(10, 0, 3, 0), InvalidSpec);
}

TEST_CASE("BA: earliest nodes accumulate the largest mean degree") {
    double early = 0.0, late = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = generate_ba(200, 3, 3, seed);
        for (NodeId v = 0; v < 3; ++v) early += static_cast<double>(degree(g, v));
        for (NodeId v = 197; v < 200; ++v) late += static_cast<double>(degree(g, v));
    }
    CHECK(early > 3 * late);
}

TEST_CASE("ER") {
    CHECK(generate_er(10, 0.0, 1).edge_count() == 0);
    CHECK(generate_er(10, 1.0, 1).edge_count() == 45);
    CHECK_THROWS_AS(generate_er(10, 1.5, 1), InvalidSpec);

    // M ~ Binomial(44850, 0.02); the mean of 1000 draws has sd sqrt(var / 1000)
    const double trials = 300.0 * 299.0 / 2.0;
    const double expected = trials * 0.02;
    const double sd_of_mean = std::sqrt(trials * 0.02 * 0.98 / 1000.0);
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) sum += static_cast<double>(generate_er(300, 0.02, seed).edge_count());
    CHECK(std::abs(sum / 1000.0 - expected) < 3.0 * sd_of_mean);
}

TEST_CASE("WS") {
    Graph ring = generate_ws(10, 4, 0.0, 3);
    for (NodeId v = 0; v < 10; ++v) CHECK(degree(ring, v) == 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate_ws(10, 4, 0.1 * static_cast<double>(seed % 11), seed);
        CHECK(g.edge_count() == 20);
        CHECK(simple(g));
    }
    Graph big = generate_ws(300, 4, 0.5, 5);
    CHECK(2.0 * static_cast<double>(big.edge_count()) / 300.0 == 4.0);
    CHECK_FALSE(big == generate_ws(300, 4, 0.0, 5));

    CHECK_THROWS_AS(generate_ws(10, 3, 0.5, 0), InvalidSpec);
    CHECK_THROWS_AS(generate_ws(4, 4, 0.5, 0), InvalidSpec);
    CHECK(generate_ws(5, 0, 0.5, 0).edge_count() == 0);
}

TEST_CASE("karate") {
    Graph k = karate();
    CHECK(k.node_count() == 34);
    CHECK(k.edge_count() == 78);
    CHECK(largest_connected_cluster(k, NodeMask(34)).size() == 34);
}

TEST_CASE("edge list read/write") {
    std::istringstream p3("1 2\n2 3\n");
    CHECK(read_edge_list(p3) == path(3));

    std::istringstream zero("# comment\n0 1\n\n1 2\n");
    CHECK(read_edge_list(zero, false) == path(3));

    std::stringstream buffer;
    write_edge_list(karate(), buffer);
    CHECK(read_edge_list(buffer) == karate());

    // isolated trailing nodes survive through the node-count header
    std::stringstream iso;
    write_edge_list(from_edge_list(5, std::vector<Edge>{{0, 1}}), iso, false);
    CHECK(read_edge_list(iso, false).node_count() == 5);

    std::istringstream bad("1 x\n");
    try {
        read_edge_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    std::istringstream three("1 2\n2 3 4\n");
    CHECK_THROWS_AS(read_edge_list(three), ParseError);
    std::istringstream zero_in_one_based("0 1\n");
    CHECK_THROWS_AS(read_edge_list(zero_in_one_based), ParseError);
}

TEST_CASE("property: generated graphs are simple and reproducible") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint64_t seed = rng();
        const std::size_t n = 10 + rng.below(60);
        NetworkSpec specs[] = {
            {.model = NetworkModel::BA, .n = n, .m = 2, .m0 = 3, .seed = seed},
            {.model = NetworkModel::ER, .n = n, .p = 0.1, .seed = seed},
            {.model = NetworkModel::WS, .n = n, .m = 4, .p = 0.3, .seed = seed},
        };
        for (const auto& spec : specs) {
            Graph g = build_network(spec);
            CHECK(simple(g));
            CHECK(g == build_network(spec));
        }
    }
}
