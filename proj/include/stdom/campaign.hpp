#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stdom/domination.hpp"
#include "stdom/graph.hpp"
#include "stdom/theorems.hpp"

namespace stdom {

enum class Severity { Info, TightnessHit, ConstructionInvalid, BoundViolation, Critical };
inline constexpr int kSeverityCount = 5;

const char* severity_name(Severity s);

struct FamilySpec {
    enum class Type { Gnp, Tree, Exhaustive };
    Type type = Type::Gnp;
    int n = 0;        // gnp / tree order
    double p = 0.0;   // gnp edge probability
    int trials = 1;   // gnp / tree repetitions
    int max_n = 0;    // exhaustive: every labeled graph with order <= max_n
};

struct CampaignConfig {
    std::vector<FamilySpec> families;
    std::uint64_t seed = 0;
    std::vector<std::string> theorems;  // t21 t22 t23 cor t24 bc
    std::string csv_path;
    std::string json_path;
    int solver_cap = kDefaultSolverCap;
    int threads = 0;  // 0: all available

    static CampaignConfig from_json_text(const std::string& text);
    static CampaignConfig load(const std::string& path);
};

// Outcome of one proof-case construction, kept per trial so candidate sizes
// (e.g. |D'| against the t24 ceiling) stay on record.
struct ConstructionNote {
    std::string case_label;
    bool forward = true;
    int size = 0;
    bool valid = false;
};

// One row per (graph, target, theorem) trial.
struct Finding {
    std::uint64_t graph_hash = 0;
    int n = 0;
    int m = 0;
    std::string theorem;  // token, or "bc"
    std::string target;   // "v3", "e1-2", or "-"
    std::string graph_text;
    std::vector<ConstructionNote> constructions;
    bool has_values = false;
    int gamma_before = 0;
    int gamma_after = 0;
    std::optional<int> lower;
    std::optional<int> upper;
    bool lower_tight = false;
    bool upper_tight = false;
    bool violated = false;
    Severity severity = Severity::Info;
    std::string detail;
};

struct CampaignSummary {
    std::array<std::uint64_t, kSeverityCount> by_severity{};
    std::uint64_t graphs = 0;
    std::uint64_t findings = 0;
    int exit_code = 0;  // 1 iff any critical finding
};

struct CampaignResult {
    std::vector<Finding> findings;
    CampaignSummary summary;
};

// Expands the families into a deterministic graph sequence, verifies every
// selected theorem on every applicable target, and merges findings in
// (family, trial, target, theorem) order. Worker-pool parallel when built
// with OpenMP; output bytes do not depend on the thread count.
CampaignResult run_campaign(const CampaignConfig& config);

void write_csv(std::ostream& out, const CampaignConfig& config,
               const std::vector<Finding>& findings);
void write_json(std::ostream& out, const CampaignConfig& config, const CampaignResult& result);
// Writes csv_path / json_path when set.
void write_outputs(const CampaignConfig& config, const CampaignResult& result);

// Severity of a single verified report, plus human-readable notes.
Severity classify_report(const BoundReport& report, std::string* detail);

// JSON object for one report (the `check` subcommand's output format).
std::string report_to_json_text(const BoundReport& report);
std::string bc_to_json_text(const BoutrigChellaliReport& report);

}  // namespace stdom
