#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stdom {

// Undirected edge, stored normalized (u < v).
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with vertex ids 0..n-1 and sorted adjacency lists.
// Values are immutable after construction; every modification below returns a
// new graph.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_order(n)) {}

    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check_vertex(v)]; }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
    std::vector<Edge> edges() const;

    int check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range for order " + std::to_string(order()));
        return v;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

  private:
    static std::size_t check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative order");
        return static_cast<std::size_t>(n);
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Result of an operation that can renumber vertices. old_to_new[i] is the id
// of old vertex i in the new graph, or -1 if it was removed. Survivors keep
// their relative order.
struct Modified {
    Graph graph;
    std::vector<int> old_to_new;
};

Modified delete_vertex(const Graph& g, int v);
Modified delete_edge(const Graph& g, const Edge& e);
// Clique on the open neighborhood of v, then v removed.
Modified contract_vertex(const Graph& g, int v);
// Endpoints of e merged; merged vertex keeps id min(u,v) before compaction.
Modified contract_edge(const Graph& g, const Edge& e);
// Edge uv replaced by a new vertex w (id = old order) with edges uw, wv.
Modified subdivide_edge(const Graph& g, const Edge& e);
// All edges joining two neighbors of v removed; v itself stays.
Modified odot_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);
bool is_pendant(const Graph& g, int v);

struct GraphParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical edge-list text: "n m\n" then m lines "u v", u < v, ascending.
std::string serialize(const Graph& g);
// Accepts unordered/duplicated edges (deduplicated, one warning per duplicate);
// rejects self-loops, out-of-range endpoints and malformed input.
Graph parse(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::uint64_t fnv1a64(std::string_view bytes);
// Hash of the canonical serialization; stable across runs and platforms.
std::uint64_t graph_hash(const Graph& g);

}  // namespace stdom
