#include "stdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace stdom {

const char* kind_name(DominationKind k) {
    switch (k) {
        case DominationKind::Ordinary: return "ordinary";
        case DominationKind::Strong: return "strong";
        case DominationKind::Weak: return "weak";
    }
    return "?";
}

namespace {

bool degree_condition(DominationKind kind, int deg_dominator, int deg_dominated) {
    switch (kind) {
        case DominationKind::Ordinary: return true;
        case DominationKind::Strong: return deg_dominator >= deg_dominated;
        case DominationKind::Weak: return deg_dominator <= deg_dominated;
    }
    return false;
}

std::vector<char> membership(const Graph& g, const std::vector<int>& d) {
    std::vector<char> in(g.order(), 0);
    for (int v : d) in[g.check_vertex(v)] = 1;
    return in;
}

}  // namespace

bool is_dominating_set(const Graph& g, const std::vector<int>& d, DominationKind kind) {
    const auto in = membership(g, d);
    for (int x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        bool covered = false;
        for (int y : g.neighbors(x))
            if (in[y] && degree_condition(kind, g.degree(y), g.degree(x))) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& d) {
    return is_dominating_set(g, d, DominationKind::Ordinary);
}

bool is_strong_dominating_set(const Graph& g, const std::vector<int>& d) {
    return is_dominating_set(g, d, DominationKind::Strong);
}

bool is_weak_dominating_set(const Graph& g, const std::vector<int>& d) {
    return is_dominating_set(g, d, DominationKind::Weak);
}

namespace {

// Single-word fast path for orders up to 64.
struct Bits64 {
    std::uint64_t w = 0;

    static Bits64 none(int) { return {}; }
    void set(int i) { w |= std::uint64_t{1} << i; }
    bool test(int i) const { return (w >> i) & 1; }
    bool intersects(const Bits64& o) const { return (w & o.w) != 0; }
    void or_with(const Bits64& o) { w |= o.w; }
    bool contains_all(const Bits64& o) const { return (o.w & ~w) == 0; }
    int count() const { return std::popcount(w); }
};

struct BitsDyn {
    std::vector<std::uint64_t> ws;

    static BitsDyn none(int n) { return {std::vector<std::uint64_t>((n + 63) / 64, 0)}; }
    void set(int i) { ws[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (ws[i >> 6] >> (i & 63)) & 1; }
    bool intersects(const BitsDyn& o) const {
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (ws[i] & o.ws[i]) return true;
        return false;
    }
    void or_with(const BitsDyn& o) {
        for (std::size_t i = 0; i < ws.size(); ++i) ws[i] |= o.ws[i];
    }
    bool contains_all(const BitsDyn& o) const {
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (o.ws[i] & ~ws[i]) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : ws) c += std::popcount(w);
        return c;
    }
};

template <class Bits>
struct Search {
    const Graph& g;
    int n;
    std::vector<Bits> eligible;  // eligible[x]: x itself plus its possible dominators
    std::vector<Bits> covers;    // covers[y]: y itself plus what picking y covers
    std::vector<int> pack_order; // by |eligible| ascending, then id
    Bits all;
    std::uint64_t nodes = 0;
    int limit = 0;
    std::vector<int> chosen;

    Search(const Graph& graph, DominationKind kind) : g(graph), n(graph.order()) {
        eligible.assign(n, Bits::none(n));
        covers.assign(n, Bits::none(n));
        all = Bits::none(n);
        for (int x = 0; x < n; ++x) {
            all.set(x);
            eligible[x].set(x);
            covers[x].set(x);
            for (int y : g.neighbors(x))
                if (degree_condition(kind, g.degree(y), g.degree(x))) eligible[x].set(y);
            for (int x2 : g.neighbors(x))
                if (degree_condition(kind, g.degree(x), g.degree(x2))) covers[x].set(x2);
        }
        pack_order.resize(n);
        std::iota(pack_order.begin(), pack_order.end(), 0);
        std::vector<int> sizes(n);
        for (int x = 0; x < n; ++x) sizes[x] = eligible[x].count();
        std::sort(pack_order.begin(), pack_order.end(),
                  [&](int a, int b) { return sizes[a] != sizes[b] ? sizes[a] < sizes[b] : a < b; });
    }

    // Vertices with pairwise disjoint eligible sets need pairwise distinct
    // dominators, so the packing size is an admissible lower bound.
    int packing(const Bits& covered) const {
        Bits used = Bits::none(n);
        int cnt = 0;
        for (int x : pack_order) {
            if (covered.test(x)) continue;
            if (!used.intersects(eligible[x])) {
                ++cnt;
                used.or_with(eligible[x]);
            }
        }
        return cnt;
    }

    bool dfs(const Bits& covered, int size) {
        ++nodes;
        if (covered.contains_all(all)) return true;
        if (size >= limit || size + packing(covered) > limit) return false;
        int branch = -1, best = n + 1;
        for (int x = 0; x < n; ++x) {
            if (covered.test(x)) continue;
            int c = eligible[x].count();
            if (c < best) {
                best = c;
                branch = x;
            }
        }
        for (int y = 0; y < n; ++y) {
            if (!eligible[branch].test(y)) continue;
            Bits next = covered;
            next.or_with(covers[y]);
            chosen.push_back(y);
            if (dfs(next, size + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }

    GammaResult run(DominationKind kind) {
        GammaResult res;
        res.witness.kind = kind;
        for (int k = std::max(packing(Bits::none(n)), n > 0 ? 1 : 0); ; ++k) {
            assert(k <= n);
            limit = k;
            chosen.clear();
            if (dfs(Bits::none(n), 0)) {
                res.value = k;
                res.witness.vertices = chosen;
                std::sort(res.witness.vertices.begin(), res.witness.vertices.end());
                res.witness.valid = true;
                res.nodes_explored = nodes;
                return res;
            }
        }
    }
};

}  // namespace

GammaResult gamma_exact(const Graph& g, DominationKind kind, int cap) {
    if (g.order() > cap)
        throw SolverCapExceeded("instance order " + std::to_string(g.order()) +
                                " exceeds solver cap " + std::to_string(cap));
    if (g.order() == 0) {
        GammaResult res;
        res.witness.kind = kind;
        res.witness.valid = true;
        return res;
    }
    if (g.order() <= 64) return Search<Bits64>(g, kind).run(kind);
    return Search<BitsDyn>(g, kind).run(kind);
}

GammaResult gamma_ordinary_exact(const Graph& g, int cap) {
    return gamma_exact(g, DominationKind::Ordinary, cap);
}

GammaResult gamma_st_exact(const Graph& g, int cap) {
    return gamma_exact(g, DominationKind::Strong, cap);
}

GammaResult gamma_w_exact(const Graph& g, int cap) {
    return gamma_exact(g, DominationKind::Weak, cap);
}

DominationWitness greedy_strong_upper(const Graph& g) {
    const int n = g.order();
    std::vector<char> covered(n, 0);
    std::vector<char> in(n, 0);
    int uncovered = n;
    auto gain = [&](int y) {
        int c = covered[y] ? 0 : 1;
        for (int x : g.neighbors(y))
            if (!covered[x] && g.degree(y) >= g.degree(x)) ++c;
        return c;
    };
    DominationWitness w;
    w.kind = DominationKind::Strong;
    while (uncovered > 0) {
        int pick = -1, best = -1;
        for (int y = 0; y < n; ++y) {
            if (in[y]) continue;
            int c = gain(y);
            if (c > best) {
                best = c;
                pick = y;
            }
        }
        // every uncovered vertex still covers itself, so progress is guaranteed
        if (pick < 0) break;
        in[pick] = 1;
        if (!covered[pick]) {
            covered[pick] = 1;
            --uncovered;
        }
        for (int x : g.neighbors(pick))
            if (!covered[x] && g.degree(pick) >= g.degree(x)) {
                covered[x] = 1;
                --uncovered;
            }
        w.vertices.push_back(pick);
    }
    std::sort(w.vertices.begin(), w.vertices.end());
    w.valid = is_strong_dominating_set(g, w.vertices);
    return w;
}

BoutrigChellaliReport check_boutrig_chellali(const Graph& g, int cap) {
    BoutrigChellaliReport r;
    r.n = g.order();
    if (g.order() < 3) {
        r.not_applicable_reason = "order below 3";
        return r;
    }
    if (!is_connected(g)) {
        r.not_applicable_reason = "graph not connected";
        return r;
    }
    r.applicable = true;
    r.gamma_st = gamma_st_exact(g, cap).value;
    r.gamma_w = gamma_w_exact(g, cap).value;
    r.max_degree = g.max_degree();
    // lhs = gamma_w + 3*gamma_st/(Delta+1), exactly
    r.lhs_den = r.max_degree + 1;
    r.lhs_num = static_cast<long long>(r.gamma_w) * r.lhs_den + 3LL * r.gamma_st;
    const long long rhs_num = static_cast<long long>(r.n) * r.lhs_den;
    r.holds = r.lhs_num <= rhs_num;
    r.equality = r.lhs_num == rhs_num;
    return r;
}

}  // namespace stdom
