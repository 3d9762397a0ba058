#pragma once

#include <cstdint>
#include <vector>

#include "stdom/graph.hpp"
#include "stdom/rng.hpp"

namespace stdom {

// G(n, p): each unordered pair independently with probability p. Identical
// rng state gives an identical graph.
Graph gen_gnp(int n, double p, SplitMix64& rng);

// Uniform random labeled tree (Pruefer-sequence decoding); n-1 edges,
// connected.
Graph gen_random_tree(int n, SplitMix64& rng);

// Labeled enumeration of all graphs on exactly n vertices, by edge mask;
// count is 2^(n choose 2). Deduplication up to isomorphism is deliberately
// not attempted.
std::uint64_t labeled_graph_count(int n);
Graph labeled_graph(int n, std::uint64_t mask);

}  // namespace stdom
