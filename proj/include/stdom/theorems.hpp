#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stdom/domination.hpp"
#include "stdom/graph.hpp"

namespace stdom {

// The five bound statements checked by this library. T21: vertex deletion,
// T22: contraction of a non-pendant vertex, T23: contraction of a pendant
// vertex, COR: contraction of a pendant edge, T24: the G (.) v bound.
enum class TheoremId { T21, T22, T23, Cor, T24 };

const char* theorem_token(TheoremId id);   // "t21", "t22", "t23", "cor", "t24"
const char* theorem_label(TheoremId id);   // "T2.1", ...
std::optional<TheoremId> theorem_from_token(const std::string& tok);

// A vertex or an edge of the graph under test.
struct Target {
    std::variant<int, Edge> value;

    static Target vertex(int v) { return {v}; }
    static Target edge(Edge e) { return {e}; }
    bool is_vertex() const { return std::holds_alternative<int>(value); }
    int as_vertex() const { return std::get<int>(value); }
    Edge as_edge() const { return std::get<Edge>(value); }
    std::string to_string() const;
};

// Candidate set produced by one proof-case construction, checked against the
// target graph. Candidates are in the target graph's id space.
struct TheoremConstruction {
    std::string case_label;
    bool forward = true;  // forward: witness for the modified graph
    std::vector<int> candidate;
    bool valid = false;
};

struct BoundReport {
    TheoremId theorem = TheoremId::T21;
    Target target = Target::vertex(0);
    bool applicable = false;
    std::string not_applicable_reason;
    int gamma_before = 0;
    int gamma_after = 0;
    std::optional<int> lower;  // absent for T24
    int upper = 0;
    bool lower_tight = false;
    bool upper_tight = false;
    bool violated = false;
    std::vector<TheoremConstruction> constructions;
};

// Bound calculators. Each computes both exact values and fills the tightness
// and violation flags; preconditions are enforced with invalid_argument.
BoundReport bounds_vertex_deletion(const Graph& g, int v, int cap = kDefaultSolverCap);
BoundReport bounds_vertex_contraction(const Graph& g, int v, int cap = kDefaultSolverCap);
BoundReport bounds_pendant_contraction(const Graph& g, int v, int cap = kDefaultSolverCap);
BoundReport bounds_edge_contraction_pendant(const Graph& g, const Edge& e,
                                            int cap = kDefaultSolverCap);
long long odot_bound_rhs(const Graph& g, int v, int cap = kDefaultSolverCap);

// Proof-derived witness constructions. d / s must be valid strong dominating
// sets of the graph they are drawn from (g, or the modified graph for the
// reverse direction); candidates are checked, never assumed valid.
TheoremConstruction construct_deletion_forward(const Graph& g, int v, const std::vector<int>& d);
TheoremConstruction construct_deletion_reverse(const Graph& g, int v, const std::vector<int>& s);
TheoremConstruction construct_contraction_forward(const Graph& g, int v,
                                                  const std::vector<int>& d);
TheoremConstruction construct_contraction_reverse(const Graph& g, int v,
                                                  const std::vector<int>& s);
TheoremConstruction construct_pendant_forward(const Graph& g, int v, const std::vector<int>& d);
TheoremConstruction construct_odot_witness(const Graph& g, int v, const std::vector<int>& d);

// Runs the bound calculator and every applicable construction for one
// (graph, target, theorem) trial. Precondition mismatches come back as
// not-applicable reports rather than errors.
BoundReport verify_theorem(const Graph& g, const Target& target, TheoremId id,
                           int cap = kDefaultSolverCap);

}  // namespace stdom
