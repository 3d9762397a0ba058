#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdom/graph.hpp"

namespace stdom {

enum class DominationKind { Ordinary, Strong, Weak };

const char* kind_name(DominationKind k);

// x not in D is covered by y in D when xy is an edge and the degree condition
// for the kind holds (none / deg y >= deg x / deg y <= deg x).
bool is_dominating_set(const Graph& g, const std::vector<int>& d);
bool is_strong_dominating_set(const Graph& g, const std::vector<int>& d);
bool is_weak_dominating_set(const Graph& g, const std::vector<int>& d);
bool is_dominating_set(const Graph& g, const std::vector<int>& d, DominationKind kind);

struct DominationWitness {
    std::vector<int> vertices;  // sorted ascending
    DominationKind kind = DominationKind::Strong;
    bool valid = false;

    int cardinality() const { return static_cast<int>(vertices.size()); }
};

struct GammaResult {
    int value = 0;
    DominationWitness witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr int kDefaultSolverCap = 64;

struct SolverCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact minimum by iterative deepening over the target cardinality with a
// disjoint eligible-set packing bound; refuses instances above the cap rather
// than risk an unfinished search being mistaken for an answer.
GammaResult gamma_exact(const Graph& g, DominationKind kind, int cap = kDefaultSolverCap);
GammaResult gamma_ordinary_exact(const Graph& g, int cap = kDefaultSolverCap);
GammaResult gamma_st_exact(const Graph& g, int cap = kDefaultSolverCap);
GammaResult gamma_w_exact(const Graph& g, int cap = kDefaultSolverCap);

// Repeatedly adds the vertex strong-dominating the most uncovered vertices
// (a vertex covers itself by membership), ties by smaller id.
DominationWitness greedy_strong_upper(const Graph& g);

// gamma_w(G) + 3/(Delta+1) * gamma_st(G) <= n, connected graphs of order >= 3.
// lhs kept as an exact fraction lhs_num/lhs_den.
struct BoutrigChellaliReport {
    bool applicable = false;
    std::string not_applicable_reason;
    int n = 0;
    int gamma_st = 0;
    int gamma_w = 0;
    int max_degree = 0;
    long long lhs_num = 0;
    long long lhs_den = 1;
    bool holds = false;
    bool equality = false;
};

BoutrigChellaliReport check_boutrig_chellali(const Graph& g, int cap = kDefaultSolverCap);

}  // namespace stdom
