#include <set>

#include "doctest.h"
#include "stdom/generators.hpp"
#include "stdom/graph.hpp"

using namespace stdom;

TEST_CASE("gnp boundary probabilities") {
    SplitMix64 rng(1);
    CHECK(gen_gnp(5, 0.0, rng) == Graph(5));
    CHECK(gen_gnp(5, 1.0, rng).edge_count() == 10);
    CHECK(gen_gnp(1, 0.5, rng).order() == 1);
    CHECK_THROWS_AS(gen_gnp(3, 1.5, rng), std::invalid_argument);
}

TEST_CASE("gnp is reproducible from the seed") {
    SplitMix64 a(123), b(123);
    CHECK(gen_gnp(8, 0.37, a) == gen_gnp(8, 0.37, b));
    // distinct draws from the same stream differ (overwhelmingly)
    SplitMix64 c(123);
    const Graph g1 = gen_gnp(8, 0.5, c);
    const Graph g2 = gen_gnp(8, 0.5, c);
    CHECK(g1 != g2);
}

TEST_CASE("gnp regression fixture, seed 42") {
    SplitMix64 rng(42);
    const Graph g = gen_gnp(6, 0.5, rng);
    CHECK(graph_hash(g) == 0xb14a5213cafe600aULL);
}

TEST_CASE("random trees are trees") {
    SplitMix64 rng(77);
    CHECK(gen_random_tree(1, rng) == Graph(1));
    CHECK(gen_random_tree(2, rng) == Graph::from_edge_list(2, {{0, 1}}));
    for (int t = 0; t < 100; ++t) {
        const int n = 3 + static_cast<int>(rng.next_below(8));
        const Graph g = gen_random_tree(n, rng);
        CAPTURE(serialize(g));
        CHECK(g.edge_count() == n - 1);
        CHECK(is_connected(g));
    }
}

TEST_CASE("tree regression fixture, seed 42") {
    SplitMix64 rng(42);
    const Graph g = gen_random_tree(9, rng);
    CHECK(graph_hash(g) == 0x6b644b5f18dd68b2ULL);
}

TEST_CASE("labeled enumeration") {
    CHECK(labeled_graph_count(1) == 1);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph(3, 0b111) == Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(labeled_graph(3, 0) == Graph(3));
    // each mask yields a distinct graph
    std::set<std::uint64_t> hashes;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        hashes.insert(graph_hash(labeled_graph(4, mask)));
    CHECK(hashes.size() == 64);
}
