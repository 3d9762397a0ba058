#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stdom/graph.hpp"
#include "stdom/theorems.hpp"

namespace stdom {

// Canonical labelings: star center is 0, paths and cycles are numbered along
// the walk.
Graph star(int leaves);    // K_{1,k}, order k+1
Graph path(int order);     // P_k
Graph cycle(int order);    // C_k, order >= 3
Graph complete(int order); // K_k

enum class ExpectedTightness { Lower, Upper };

// A known tight instance: a graph, the marked target, the bound it is tight
// for, and which side of the interval it must hit.
struct GalleryEntry {
    std::string name;
    Graph graph;
    Target target = Target::vertex(0);
    std::optional<int> support;  // the marked u, when the instance has one
    TheoremId theorem = TheoremId::T21;
    ExpectedTightness expected = ExpectedTightness::Lower;
};

// Loads one of the hand-transcribed instances (fig1, fig2_G, fig3_G, fig4,
// fig5_G) from <data_dir>/<id>.graph plus its <id>.json sidecar.
GalleryEntry figure_graph(const std::string& id, const std::string& data_dir);

// Every tightness instance: stars (n=3..5) for T2.1's upper bound, paths of
// order 3k+1 (k=1..4) for T2.3's lower bound, and the five transcribed
// instances.
std::vector<GalleryEntry> tightness_suite(const std::string& data_dir);

// True when the entry's expected side of the interval is hit exactly.
bool entry_matches(const GalleryEntry& entry, const BoundReport& report);

}  // namespace stdom
