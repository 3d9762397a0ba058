// stdom: exact strong/weak domination numbers, the five graph-modification
// bound checks, and the tightness-instance gallery.
//
// Exit codes: 0 clean, 1 critical findings / gallery mismatch, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "stdom/campaign.hpp"
#include "stdom/domination.hpp"
#include "stdom/gallery.hpp"
#include "stdom/graph.hpp"
#include "stdom/theorems.hpp"

#ifndef STDOM_SOURCE_DATA_DIR
#define STDOM_SOURCE_DATA_DIR "data/gallery"
#endif

namespace {

int env_solver_cap() {
    if (const char* s = std::getenv("STDOM_SOLVER_CAP")) {
        try {
            const int cap = std::stoi(s);
            if (cap > 0) return cap;
        } catch (...) {
        }
        std::cerr << "warning: ignoring bad STDOM_SOLVER_CAP '" << s << "'\n";
    }
    return stdom::kDefaultSolverCap;
}

stdom::Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::vector<std::string> warnings;
    stdom::Graph g = stdom::parse(ss.str(), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return g;
}

// vertex targets are plain ids; edge targets are "u-v" or "u,v"
stdom::Target parse_target(const std::string& text, bool want_edge) {
    const auto sep = text.find_first_of("-,");
    if (sep == std::string::npos) {
        if (want_edge) throw std::runtime_error("edge target expected, e.g. 2-3");
        return stdom::Target::vertex(std::stoi(text));
    }
    if (!want_edge) throw std::runtime_error("vertex target expected, e.g. 4");
    const int u = std::stoi(text.substr(0, sep));
    const int v = std::stoi(text.substr(sep + 1));
    return stdom::Target::edge(stdom::Edge(u, v));
}

std::string resolve_data_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("STDOM_DATA_DIR")) return env;
    if (std::ifstream("data/gallery/fig1.graph").good()) return "data/gallery";
    return STDOM_SOURCE_DATA_DIR;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong domination number toolkit"};
    app.require_subcommand(1);
    const int cap = env_solver_cap();

    auto* cmd_gamma = app.add_subcommand("gamma-st", "exact strong domination number");
    std::string gamma_file;
    cmd_gamma->add_option("file", gamma_file, "edge-list graph file")->required();

    auto* cmd_modify = app.add_subcommand("modify", "apply a modification operation");
    std::string mod_file, mod_op, mod_target;
    cmd_modify->add_option("file", mod_file)->required();
    cmd_modify->add_option("--op", mod_op, "delete-v|contract-v|contract-e|subdivide|odot")
        ->required();
    cmd_modify->add_option("--target", mod_target, "vertex id, or edge u-v")->required();

    auto* cmd_check = app.add_subcommand("check", "verify one bound on one target");
    std::string chk_file, chk_theorem, chk_target;
    cmd_check->add_option("file", chk_file)->required();
    cmd_check->add_option("--theorem", chk_theorem, "t21|t22|t23|cor|t24|bc")->required();
    cmd_check->add_option("--target", chk_target, "vertex id, or edge u-v for cor");

    auto* cmd_campaign = app.add_subcommand("campaign", "run a fuzzing campaign");
    std::string campaign_config;
    cmd_campaign->add_option("--config", campaign_config, "campaign config JSON")->required();

    auto* cmd_gallery = app.add_subcommand("gallery", "list or verify the tightness instances");
    bool gallery_verify = false;
    std::string gallery_dir;
    cmd_gallery->add_flag("--verify", gallery_verify, "recompute and check every expected flag");
    cmd_gallery->add_option("--data-dir", gallery_dir, "gallery data directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gamma->parsed()) {
            const auto g = load_graph(gamma_file);
            const auto res = stdom::gamma_st_exact(g, cap);
            std::cout << "value " << res.value << "\n";
            std::cout << "witness";
            for (int v : res.witness.vertices) std::cout << ' ' << v;
            std::cout << "\n";
            return 0;
        }
        if (cmd_modify->parsed()) {
            const auto g = load_graph(mod_file);
            stdom::Modified mod;
            if (mod_op == "delete-v")
                mod = stdom::delete_vertex(g, parse_target(mod_target, false).as_vertex());
            else if (mod_op == "contract-v")
                mod = stdom::contract_vertex(g, parse_target(mod_target, false).as_vertex());
            else if (mod_op == "contract-e")
                mod = stdom::contract_edge(g, parse_target(mod_target, true).as_edge());
            else if (mod_op == "subdivide")
                mod = stdom::subdivide_edge(g, parse_target(mod_target, true).as_edge());
            else if (mod_op == "odot")
                mod = stdom::odot_vertex(g, parse_target(mod_target, false).as_vertex());
            else
                throw CLI::ValidationError("--op", "unknown operation '" + mod_op + "'");
            std::cout << stdom::serialize(mod.graph);
            return 0;
        }
        if (cmd_check->parsed()) {
            const auto g = load_graph(chk_file);
            if (chk_theorem == "bc") {
                std::cout << stdom::bc_to_json_text(stdom::check_boutrig_chellali(g, cap))
                          << "\n";
                return 0;
            }
            const auto id = stdom::theorem_from_token(chk_theorem);
            if (!id) throw CLI::ValidationError("--theorem", "unknown theorem " + chk_theorem);
            if (chk_target.empty())
                throw CLI::ValidationError("--target", "required for " + chk_theorem);
            const auto target = parse_target(chk_target, *id == stdom::TheoremId::Cor);
            const auto report = stdom::verify_theorem(g, target, *id, cap);
            std::cout << stdom::report_to_json_text(report) << "\n";
            return 0;
        }
        if (cmd_campaign->parsed()) {
            auto config = stdom::CampaignConfig::load(campaign_config);
            if (std::getenv("STDOM_SOLVER_CAP")) config.solver_cap = cap;
            const auto result = stdom::run_campaign(config);
            stdom::write_outputs(config, result);
            std::cout << "graphs " << result.summary.graphs << "\n";
            std::cout << "findings " << result.summary.findings << "\n";
            for (int s = 0; s < stdom::kSeverityCount; ++s)
                std::cout << stdom::severity_name(static_cast<stdom::Severity>(s)) << " "
                          << result.summary.by_severity[s] << "\n";
            return result.summary.exit_code;
        }
        if (cmd_gallery->parsed()) {
            const auto dir = resolve_data_dir(gallery_dir);
            const auto suite = stdom::tightness_suite(dir);
            if (!gallery_verify) {
                for (const auto& e : suite)
                    std::cout << e.name << " n=" << e.graph.order()
                              << " m=" << e.graph.edge_count() << " theorem "
                              << stdom::theorem_token(e.theorem) << " target "
                              << e.target.to_string() << " expected "
                              << (e.expected == stdom::ExpectedTightness::Lower ? "lower-tight"
                                                                                : "upper-tight")
                              << "\n";
                return 0;
            }
            int mismatches = 0;
            for (const auto& e : suite) {
                // entries may exceed the default cap; the gallery is trusted input
                const int entry_cap = std::max(cap, e.graph.order());
                const auto report = stdom::verify_theorem(e.graph, e.target, e.theorem, entry_cap);
                const bool ok = stdom::entry_matches(e, report);
                std::cout << (ok ? "PASS " : "FAIL ") << e.name << " expected "
                          << (e.expected == stdom::ExpectedTightness::Lower ? "lower-tight"
                                                                            : "upper-tight")
                          << " got [lower-tight=" << report.lower_tight
                          << " upper-tight=" << report.upper_tight
                          << " gamma " << report.gamma_before << "->" << report.gamma_after
                          << " bounds "
                          << (report.lower ? std::to_string(*report.lower) : std::string("-"))
                          << ".." << report.upper << "]\n";
                if (!ok) ++mismatches;
            }
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
