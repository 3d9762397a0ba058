#include "stdom/gallery.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stdom {

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, es);
}

Graph path(int order) {
    if (order < 1) throw std::invalid_argument("path needs order >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < order; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edge_list(order, es);
}

Graph cycle(int order) {
    if (order < 3) throw std::invalid_argument("cycle needs order >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < order; ++i) es.emplace_back(i, (i + 1) % order);
    return Graph::from_edge_list(order, es);
}

Graph complete(int order) {
    if (order < 1) throw std::invalid_argument("complete graph needs order >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) es.emplace_back(i, j);
    return Graph::from_edge_list(order, es);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

GalleryEntry figure_graph(const std::string& id, const std::string& data_dir) {
    static const char* known[] = {"fig1", "fig2_G", "fig3_G", "fig4", "fig5_G"};
    bool ok = false;
    for (const char* k : known) ok = ok || id == k;
    if (!ok) throw std::invalid_argument("unknown gallery id '" + id + "'");

    GalleryEntry e;
    e.name = id;
    e.graph = parse(read_file(data_dir + "/" + id + ".graph"));
    const auto side = nlohmann::json::parse(read_file(data_dir + "/" + id + ".json"));
    const int v = side.at("v").get<int>();
    e.graph.check_vertex(v);
    e.target = Target::vertex(v);
    if (side.contains("u")) e.support = side.at("u").get<int>();
    const std::string thm = side.at("theorem").get<std::string>();
    if (thm == "T2.1") e.theorem = TheoremId::T21;
    else if (thm == "T2.2") e.theorem = TheoremId::T22;
    else if (thm == "T2.3") e.theorem = TheoremId::T23;
    else if (thm == "COR") e.theorem = TheoremId::Cor;
    else if (thm == "T2.4") e.theorem = TheoremId::T24;
    else throw std::runtime_error("bad theorem in sidecar for " + id);
    const std::string exp = side.at("expected").get<std::string>();
    if (exp == "lower-tight") e.expected = ExpectedTightness::Lower;
    else if (exp == "upper-tight") e.expected = ExpectedTightness::Upper;
    else throw std::runtime_error("bad expected flag in sidecar for " + id);
    return e;
}

std::vector<GalleryEntry> tightness_suite(const std::string& data_dir) {
    std::vector<GalleryEntry> out;
    for (int n = 3; n <= 5; ++n) {
        GalleryEntry e;
        e.name = "star" + std::to_string(n);
        e.graph = star(n);
        e.target = Target::vertex(0);
        e.theorem = TheoremId::T21;
        e.expected = ExpectedTightness::Upper;
        out.push_back(std::move(e));
    }
    for (int k = 1; k <= 4; ++k) {
        GalleryEntry e;
        e.name = "path" + std::to_string(3 * k + 1);
        e.graph = path(3 * k + 1);
        e.target = Target::vertex(3 * k);  // the far pendant endpoint
        e.support = 3 * k - 1;
        e.theorem = TheoremId::T23;
        e.expected = ExpectedTightness::Lower;
        out.push_back(std::move(e));
    }
    for (const char* id : {"fig1", "fig2_G", "fig3_G", "fig4", "fig5_G"})
        out.push_back(figure_graph(id, data_dir));
    return out;
}

bool entry_matches(const GalleryEntry& entry, const BoundReport& report) {
    if (!report.applicable) return false;
    return entry.expected == ExpectedTightness::Lower ? report.lower_tight : report.upper_tight;
}

}  // namespace stdom
