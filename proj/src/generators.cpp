#include "stdom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>

namespace stdom {

Graph gen_gnp(int n, double p, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs 0 <= p <= 1");
    std::vector<Edge> es;
    const bool always = p >= 1.0;
    const bool never = p <= 0.0;
    // 64-bit threshold compare keeps the draw exact and platform-stable
    const std::uint64_t threshold =
        always ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t r = rng.next();
            if (never) continue;
            if (always || r < threshold) es.emplace_back(u, v);
        }
    return Graph::from_edge_list(n, es);
}

Graph gen_random_tree(int n, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph::from_edge_list(2, {Edge(0, 1)});
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    // Pruefer decoding
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 1) leaves.push(i);
    std::vector<Edge> es;
    es.reserve(n - 1);
    for (int s : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        es.emplace_back(leaf, s);
        deg[leaf] = 0;
        if (--deg[s] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    es.emplace_back(a, b);
    return Graph::from_edge_list(n, es);
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    const int pairs = n * (n - 1) / 2;
    if (pairs >= 64) throw std::invalid_argument("too many labeled graphs to enumerate");
    return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

}  // namespace stdom
