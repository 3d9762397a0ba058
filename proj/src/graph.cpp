#include "stdom/graph.hpp"

#include <algorithm>
#include <charconv>

namespace stdom {

namespace {

// Compacting remap after removing exactly the vertices marked dead.
std::vector<int> compaction_map(int n, const std::vector<char>& dead) {
    std::vector<int> map(n);
    int next = 0;
    for (int i = 0; i < n; ++i) map[i] = dead[i] ? -1 : next++;
    return map;
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
    }
    std::vector<Edge> es = edges;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (const Edge& e : es) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = static_cast<int>(es.size());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Modified delete_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    const int n = g.order();
    std::vector<char> dead(n, 0);
    dead[v] = 1;
    auto map = compaction_map(n, dead);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) es.emplace_back(map[e.u], map[e.v]);
    return {Graph::from_edge_list(n - 1, std::move(es)), std::move(map)};
}

Modified delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") not in graph");
    std::vector<Edge> es;
    for (const Edge& f : g.edges())
        if (!(f == e)) es.push_back(f);
    std::vector<int> identity(g.order());
    for (int i = 0; i < g.order(); ++i) identity[i] = i;
    return {Graph::from_edge_list(g.order(), std::move(es)), std::move(identity)};
}

Modified contract_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    const int n = g.order();
    std::vector<char> dead(n, 0);
    dead[v] = 1;
    auto map = compaction_map(n, dead);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) es.emplace_back(map[e.u], map[e.v]);
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            es.emplace_back(map[nb[i]], map[nb[j]]);
    return {Graph::from_edge_list(n - 1, std::move(es)), std::move(map)};
}

Modified contract_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") not in graph");
    const int n = g.order();
    const int keep = e.u;  // e.u < e.v by normalization
    const int gone = e.v;
    std::vector<char> dead(n, 0);
    dead[gone] = 1;
    auto map = compaction_map(n, dead);
    map[gone] = map[keep];  // merged vertex carries min(u,v)
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        int a = map[f.u], b = map[f.v];
        if (a != b) es.emplace_back(a, b);
    }
    return {Graph::from_edge_list(n - 1, std::move(es)), std::move(map)};
}

Modified subdivide_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") not in graph");
    const int n = g.order();
    std::vector<Edge> es;
    for (const Edge& f : g.edges())
        if (!(f == e)) es.push_back(f);
    es.emplace_back(e.u, n);
    es.emplace_back(e.v, n);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    return {Graph::from_edge_list(n + 1, std::move(es)), std::move(identity)};
}

Modified odot_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    const int n = g.order();
    std::vector<char> in_nbhd(n, 0);
    for (int u : g.neighbors(v)) in_nbhd[u] = 1;
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!(in_nbhd[e.u] && in_nbhd[e.v])) es.push_back(e);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    return {Graph::from_edge_list(n, std::move(es)), std::move(identity)};
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

bool is_pendant(const Graph& g, int v) { return g.degree(v) == 1; }

std::string serialize(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace {

bool next_token(std::string_view& rest, std::string_view& tok) {
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\n' ||
                               rest[i] == '\r'))
        ++i;
    if (i == rest.size()) {
        rest = rest.substr(i);
        return false;
    }
    std::size_t j = i;
    while (j < rest.size() && rest[j] != ' ' && rest[j] != '\t' && rest[j] != '\n' &&
           rest[j] != '\r')
        ++j;
    tok = rest.substr(i, j - i);
    rest = rest.substr(j);
    return true;
}

int parse_int(std::string_view tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw GraphParseError(std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse(std::string_view text, std::vector<std::string>* warnings) {
    std::string_view rest = text;
    std::string_view tok;
    if (!next_token(rest, tok)) throw GraphParseError("empty input, expected 'n m' header");
    const int n = parse_int(tok, "vertex count");
    if (!next_token(rest, tok)) throw GraphParseError("truncated header, expected edge count");
    const int m = parse_int(tok, "edge count");

    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_token(rest, tok))
            throw GraphParseError("expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
        const int u = parse_int(tok, "edge endpoint");
        if (!next_token(rest, tok))
            throw GraphParseError("edge " + std::to_string(i) + " is missing its second endpoint");
        const int v = parse_int(tok, "edge endpoint");
        if (u == v)
            throw GraphParseError("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                  ")");
        if (u >= n || v >= n)
            throw GraphParseError("endpoint out of range in edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + "), order is " + std::to_string(n));
        Edge e(u, v);
        if (std::find(es.begin(), es.end(), e) != es.end()) {
            if (warnings)
                warnings->push_back("duplicate edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") ignored");
            continue;
        }
        es.push_back(e);
    }
    if (next_token(rest, tok))
        throw GraphParseError("trailing data after " + std::to_string(m) + " edges: '" +
                              std::string(tok) + "'");
    return Graph::from_edge_list(n, es);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t graph_hash(const Graph& g) { return fnv1a64(serialize(g)); }

}  // namespace stdom
