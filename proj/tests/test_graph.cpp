#include <algorithm>

#include "doctest.h"
#include "stdom/generators.hpp"
#include "stdom/graph.hpp"

using namespace stdom;

namespace {

Graph p4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph k3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph star3() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}); }

bool invariants_hold(const Graph& g) {
    int twice_m = 0;
    for (int v = 0; v < g.order(); ++v) {
        const auto& nbrs = g.neighbors(v);
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
        for (int u : nbrs) {
            if (u == v || u < 0 || u >= g.order()) return false;
            if (!g.has_edge(u, v)) return false;  // symmetry
        }
        twice_m += g.degree(v);
    }
    return twice_m == 2 * g.edge_count();
}

}  // namespace

TEST_CASE("edge normalization and self-loop rejection") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
}

TEST_CASE("from_edge_list builds the expected small graphs") {
    Graph p = p4();
    CHECK(p.order() == 4);
    CHECK(p.edge_count() == 3);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 2);
    Graph t = k3();
    CHECK(t.edge_count() == 3);
    CHECK(t.max_degree() == 2);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
    // duplicates collapse
    Graph d = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(d.edge_count() == 1);
}

TEST_CASE("delete_vertex compacts ids and strips incident edges") {
    auto r = delete_vertex(c4(), 0);
    CHECK(r.graph == Graph::from_edge_list(3, {{0, 1}, {1, 2}}));  // P_3
    CHECK(r.old_to_new == std::vector<int>{-1, 0, 1, 2});

    auto s = delete_vertex(star3(), 0);
    CHECK(s.graph == Graph(3));  // edgeless

    auto m = delete_vertex(p4(), 1);
    CHECK(m.graph == Graph::from_edge_list(3, {{1, 2}}));  // old 2-3 plus isolated old 0
    CHECK_THROWS_AS(delete_vertex(p4(), 9), std::invalid_argument);
}

TEST_CASE("delete_edge") {
    CHECK(delete_edge(k3(), Edge(0, 1)).graph ==
          Graph::from_edge_list(3, {{1, 2}, {0, 2}}));  // P_3 through 2
    CHECK(delete_edge(Graph::from_edge_list(2, {{0, 1}}), Edge(0, 1)).graph == Graph(2));
    CHECK(delete_edge(c4(), Edge(0, 3)).graph == p4());
    CHECK_THROWS_AS(delete_edge(p4(), Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("contract_vertex puts a clique on the open neighborhood") {
    CHECK(contract_vertex(c4(), 0).graph ==
          Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}));  // K_3
    CHECK(contract_vertex(Graph::from_edge_list(3, {{0, 1}, {1, 2}}), 1).graph ==
          Graph::from_edge_list(2, {{0, 1}}));  // P_3 / center = K_2
    CHECK(contract_vertex(star3(), 0).graph == k3());
}

TEST_CASE("contract_edge merges endpoints, keeping the graph simple") {
    CHECK(contract_edge(Graph::from_edge_list(3, {{0, 1}, {1, 2}}), Edge(0, 1)).graph ==
          Graph::from_edge_list(2, {{0, 1}}));
    CHECK(contract_edge(k3(), Edge(0, 1)).graph == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(contract_edge(c4(), Edge(1, 2)).graph ==
          Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}));  // C_3
    auto r = contract_edge(c4(), Edge(1, 2));
    CHECK(r.old_to_new == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("subdivide_edge adds the new vertex with id n") {
    CHECK(subdivide_edge(Graph::from_edge_list(2, {{0, 1}}), Edge(0, 1)).graph ==
          Graph::from_edge_list(3, {{0, 2}, {1, 2}}));
    auto c = subdivide_edge(k3(), Edge(0, 1)).graph;
    CHECK(c.order() == 4);
    CHECK(c.edge_count() == 4);
    CHECK(c.degree(3) == 2);
    // P_3 subdividing (0,1): path 0-3-1-2 in new ids
    auto p = subdivide_edge(Graph::from_edge_list(3, {{0, 1}, {1, 2}}), Edge(0, 1)).graph;
    CHECK(p == Graph::from_edge_list(4, {{1, 2}, {0, 3}, {1, 3}}));
}

TEST_CASE("odot_vertex removes exactly the edges inside the neighborhood") {
    CHECK(odot_vertex(k3(), 0).graph == Graph::from_edge_list(3, {{0, 1}, {0, 2}}));
    CHECK(odot_vertex(c4(), 0).graph == c4());
    // pendant target leaves the graph untouched
    CHECK(odot_vertex(p4(), 0).graph == p4());
    const Graph g = c4();
    auto r = odot_vertex(g, 2);
    CHECK(r.old_to_new == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("connectivity and pendant tests") {
    CHECK(is_connected(p4()));
    CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1)));
    CHECK(is_pendant(p4(), 0));
    CHECK(is_pendant(p4(), 3));
    CHECK_FALSE(is_pendant(p4(), 1));
    for (int v = 0; v < 4; ++v) CHECK_FALSE(is_pendant(c4(), v));
}

TEST_CASE("serialize emits the canonical form") {
    CHECK(serialize(Graph::from_edge_list(2, {{0, 1}})) == "2 1\n0 1\n");
    CHECK(serialize(Graph(3)) == "3 0\n");
    CHECK(serialize(c4()) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("parse accepts messy input and rejects bad input") {
    CHECK(parse("3 0\n") == Graph(3));
    CHECK(parse("4 3\n2 3\n1 0\n1 2\n") == p4());  // unordered is fine
    std::vector<std::string> warnings;
    CHECK(parse("3 2\n0 1\n1 0\n", &warnings) == Graph::from_edge_list(3, {{0, 1}}));
    CHECK(warnings.size() == 1);
    CHECK_THROWS_AS(parse("2 1\n0 2\n"), GraphParseError);
    CHECK_THROWS_AS(parse("2 1\n0 0\n"), GraphParseError);
    CHECK_THROWS_AS(parse(""), GraphParseError);
    CHECK_THROWS_AS(parse("x y\n"), GraphParseError);
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), GraphParseError);      // truncated
    CHECK_THROWS_AS(parse("2 1\n0 1\n0 1\n"), GraphParseError); // trailing data
}

TEST_CASE("round trips") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(9));
        const Graph g = gen_gnp(n, 0.4, rng);
        CAPTURE(serialize(g));
        CHECK(parse(serialize(g)) == g);
        CHECK(invariants_hold(g));
    }
}

TEST_CASE("operations preserve graph invariants and sizes") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(8));
        const Graph g = gen_gnp(n, 0.5, rng);
        const Graph copy = g;
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        CAPTURE(serialize(g));
        CAPTURE(v);

        auto del = delete_vertex(g, v);
        CHECK(invariants_hold(del.graph));
        CHECK(del.graph.order() == n - 1);

        auto con = contract_vertex(g, v);
        CHECK(invariants_hold(con.graph));
        CHECK(con.graph.order() == n - 1);

        auto od = odot_vertex(g, v);
        CHECK(invariants_hold(od.graph));
        CHECK(od.graph.order() == n);
        CHECK(od.graph.degree(v) == g.degree(v));
        // removed exactly the edges inside N(v)
        int inside = 0;
        for (const Edge& e : g.edges())
            if (g.has_edge(e.u, v) && g.has_edge(e.v, v)) ++inside;
        CHECK(od.graph.edge_count() == g.edge_count() - inside);

        if (g.edge_count() > 0) {
            const auto es = g.edges();
            const Edge e = es[rng.next_below(es.size())];
            auto ce = contract_edge(g, e);
            CHECK(invariants_hold(ce.graph));
            CHECK(ce.graph.order() == n - 1);
            auto sub = subdivide_edge(g, e);
            CHECK(invariants_hold(sub.graph));
            CHECK(sub.graph.order() == n + 1);
            CHECK(sub.graph.edge_count() == g.edge_count() + 1);
            auto de = delete_edge(g, e);
            CHECK(invariants_hold(de.graph));
            CHECK(de.graph.edge_count() == g.edge_count() - 1);
        }

        // a clique neighborhood makes contraction pure deletion
        bool clique = true;
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(v))
                if (a < b && !g.has_edge(a, b)) clique = false;
        if (clique) CHECK(con.graph == del.graph);

        CHECK(g == copy);  // inputs are never observably modified
    }
}

TEST_CASE("graph hash is the hash of the canonical text") {
    CHECK(graph_hash(p4()) == fnv1a64("4 3\n0 1\n1 2\n2 3\n"));
    CHECK(graph_hash(p4()) != graph_hash(c4()));
}
