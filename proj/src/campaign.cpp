#include "stdom/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "stdom/generators.hpp"
#include "stdom/rng.hpp"

namespace stdom {

const char* severity_name(Severity s) {
    switch (s) {
        case Severity::Info: return "info";
        case Severity::TightnessHit: return "tightness-hit";
        case Severity::ConstructionInvalid: return "construction-invalid";
        case Severity::BoundViolation: return "bound-violation";
        case Severity::Critical: return "critical";
    }
    return "?";
}

namespace {

Severity max_severity(Severity a, Severity b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

void append_detail(std::string* detail, const std::string& note) {
    if (!detail) return;
    if (!detail->empty()) *detail += "; ";
    *detail += note;
}

}  // namespace

Severity classify_report(const BoundReport& report, std::string* detail) {
    Severity sev = Severity::Info;
    if (report.violated) {
        // the published bounds are load-bearing; the closed-form T2.4 count is
        // known to undercount and stays non-critical
        const bool critical = report.theorem != TheoremId::T24;
        sev = critical ? Severity::Critical : Severity::BoundViolation;
        append_detail(detail, std::string(theorem_label(report.theorem)) + " bound violated");
    }
    for (const auto& c : report.constructions) {
        if (c.valid) continue;
        sev = max_severity(sev, Severity::ConstructionInvalid);
        append_detail(detail, std::string("invalid ") + (c.forward ? "" : "reverse ") +
                                  "construction: " + c.case_label);
    }
    if (sev == Severity::Info && (report.lower_tight || report.upper_tight)) {
        sev = Severity::TightnessHit;
        append_detail(detail, report.lower_tight ? "lower bound hit" : "upper bound hit");
    }
    return sev;
}

CampaignConfig CampaignConfig::from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CampaignConfig c;
    c.seed = j.value("seed", std::uint64_t{0});
    c.solver_cap = j.value("solver_cap", kDefaultSolverCap);
    c.threads = j.value("threads", 0);
    c.csv_path = j.value("csv", "");
    c.json_path = j.value("json", "");
    if (j.contains("theorems"))
        for (const auto& t : j.at("theorems")) c.theorems.push_back(t.get<std::string>());
    else
        c.theorems = {"t21", "t22", "t23", "cor", "t24", "bc"};
    for (const auto& t : c.theorems)
        if (t != "bc" && !theorem_from_token(t))
            throw std::invalid_argument("unknown theorem token '" + t + "'");
    if (j.contains("families")) {
        for (const auto& f : j.at("families")) {
            FamilySpec spec;
            const std::string type = f.at("type").get<std::string>();
            if (type == "gnp") {
                spec.type = FamilySpec::Type::Gnp;
                spec.n = f.at("n").get<int>();
                spec.p = f.at("p").get<double>();
                spec.trials = f.value("trials", 1);
            } else if (type == "tree") {
                spec.type = FamilySpec::Type::Tree;
                spec.n = f.at("n").get<int>();
                spec.trials = f.value("trials", 1);
            } else if (type == "exhaustive") {
                spec.type = FamilySpec::Type::Exhaustive;
                spec.max_n = f.at("max_n").get<int>();
                spec.trials = 1;
            } else {
                throw std::invalid_argument("unknown family type '" + type + "'");
            }
            if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
            const int top = spec.type == FamilySpec::Type::Exhaustive ? spec.max_n : spec.n;
            if (top > c.solver_cap)
                throw std::invalid_argument("family order exceeds solver cap");
            c.families.push_back(spec);
        }
    }
    return c;
}

CampaignConfig CampaignConfig::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

namespace {

std::vector<Graph> expand_families(const CampaignConfig& config) {
    std::vector<Graph> graphs;
    std::uint64_t trial_index = 0;
    for (const auto& fam : config.families) {
        switch (fam.type) {
            case FamilySpec::Type::Gnp:
                for (int t = 0; t < fam.trials; ++t) {
                    auto rng = substream(config.seed, trial_index++);
                    graphs.push_back(gen_gnp(fam.n, fam.p, rng));
                }
                break;
            case FamilySpec::Type::Tree:
                for (int t = 0; t < fam.trials; ++t) {
                    auto rng = substream(config.seed, trial_index++);
                    graphs.push_back(gen_random_tree(fam.n, rng));
                }
                break;
            case FamilySpec::Type::Exhaustive:
                for (int n = 1; n <= fam.max_n; ++n) {
                    const std::uint64_t count = labeled_graph_count(n);
                    for (std::uint64_t mask = 0; mask < count; ++mask) {
                        ++trial_index;
                        graphs.push_back(labeled_graph(n, mask));
                    }
                }
                break;
        }
    }
    return graphs;
}

Finding base_finding(const Graph& g, const std::string& theorem, const std::string& target) {
    Finding f;
    f.graph_text = serialize(g);
    f.graph_hash = fnv1a64(f.graph_text);
    f.n = g.order();
    f.m = g.edge_count();
    f.theorem = theorem;
    f.target = target;
    return f;
}

Finding finding_from_report(const Graph& g, const BoundReport& report) {
    Finding f = base_finding(g, theorem_token(report.theorem), report.target.to_string());
    f.has_values = true;
    f.gamma_before = report.gamma_before;
    f.gamma_after = report.gamma_after;
    f.lower = report.lower;
    f.upper = report.upper;
    f.lower_tight = report.lower_tight;
    f.upper_tight = report.upper_tight;
    f.violated = report.violated;
    for (const auto& c : report.constructions)
        f.constructions.push_back(
            {c.case_label, c.forward, static_cast<int>(c.candidate.size()), c.valid});
    f.severity = classify_report(report, &f.detail);
    return f;
}

Finding finding_from_bc(const Graph& g, const BoutrigChellaliReport& bc) {
    Finding f = base_finding(g, "bc", "-");
    f.has_values = true;
    f.gamma_before = bc.gamma_st;
    f.gamma_after = bc.gamma_w;
    f.upper = bc.n;
    f.upper_tight = bc.equality;
    f.violated = !bc.holds;
    if (!bc.holds) {
        f.severity = Severity::Critical;
        f.detail = "Boutrig-Chellali inequality violated";
    } else if (bc.equality) {
        f.severity = Severity::TightnessHit;
        f.detail = "Boutrig-Chellali equality";
    }
    return f;
}

// All findings for one graph, in (target, theorem) order with the per-graph
// bc row last.
std::vector<Finding> verify_graph(const Graph& g, const CampaignConfig& config) {
    std::vector<Finding> out;
    const auto selected = [&](const char* tok) {
        return std::find(config.theorems.begin(), config.theorems.end(), tok) !=
               config.theorems.end();
    };
    try {
        for (int v = 0; v < g.order(); ++v) {
            const Target tv = Target::vertex(v);
            if (selected("t21") && g.order() >= 2) {
                if (g.degree(v) == 0) {
                    Finding f = base_finding(g, "t21", tv.to_string());
                    f.detail = "skipped: isolated vertex (stated lower bound assumes a neighbor)";
                    out.push_back(std::move(f));
                } else {
                    out.push_back(finding_from_report(
                        g, verify_theorem(g, tv, TheoremId::T21, config.solver_cap)));
                }
            }
            if (selected("t22") && g.degree(v) >= 2)
                out.push_back(finding_from_report(
                    g, verify_theorem(g, tv, TheoremId::T22, config.solver_cap)));
            if (selected("t23") && g.degree(v) == 1)
                out.push_back(finding_from_report(
                    g, verify_theorem(g, tv, TheoremId::T23, config.solver_cap)));
            if (selected("t24"))
                out.push_back(finding_from_report(
                    g, verify_theorem(g, tv, TheoremId::T24, config.solver_cap)));
        }
        if (selected("cor")) {
            for (const Edge& e : g.edges())
                if (g.degree(e.u) == 1 || g.degree(e.v) == 1)
                    out.push_back(finding_from_report(
                        g, verify_theorem(g, Target::edge(e), TheoremId::Cor,
                                          config.solver_cap)));
        }
        if (selected("bc")) {
            const auto bc = check_boutrig_chellali(g, config.solver_cap);
            if (bc.applicable) out.push_back(finding_from_bc(g, bc));
        }
    } catch (const SolverCapExceeded& ex) {
        Finding f = base_finding(g, "-", "-");
        f.detail = std::string("skipped: ") + ex.what();
        return {f};
    }
    return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
    const std::vector<Graph> graphs = expand_families(config);
    std::vector<std::vector<Finding>> per_graph(graphs.size());

#ifdef _OPENMP
    const int nt = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(graphs.size()); ++i)
        per_graph[static_cast<std::size_t>(i)] = verify_graph(graphs[i], config);

    CampaignResult result;
    result.summary.graphs = graphs.size();
    for (auto& chunk : per_graph)
        for (auto& f : chunk) {
            result.summary.by_severity[static_cast<int>(f.severity)]++;
            result.findings.push_back(std::move(f));
        }
    result.summary.findings = result.findings.size();
    result.summary.exit_code =
        result.summary.by_severity[static_cast<int>(Severity::Critical)] > 0 ? 1 : 0;
    return result;
}

namespace {

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string flag_str(bool has_values, bool flag) {
    return has_values ? std::string(flag ? "1" : "0") : std::string();
}

}  // namespace

void write_csv(std::ostream& out, const CampaignConfig& config,
               const std::vector<Finding>& findings) {
    out << "# stdom campaign prng=" << kPrngId << " seed=" << config.seed << "\n";
    out << "graph-hash,n,m,theorem,target,gamma-before,gamma-after,lower,upper,"
           "lower-tight,upper-tight,violated,severity\n";
    char hash_hex[17];
    for (const Finding& f : findings) {
        std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                      static_cast<unsigned long long>(f.graph_hash));
        out << hash_hex << ',' << f.n << ',' << f.m << ',' << f.theorem << ',' << f.target << ','
            << (f.has_values ? std::to_string(f.gamma_before) : std::string()) << ','
            << (f.has_values ? std::to_string(f.gamma_after) : std::string()) << ','
            << opt_str(f.lower) << ',' << opt_str(f.upper) << ','
            << flag_str(f.has_values, f.lower_tight) << ','
            << flag_str(f.has_values, f.upper_tight) << ','
            << flag_str(f.has_values, f.violated) << ',' << severity_name(f.severity) << "\n";
    }
}

void write_json(std::ostream& out, const CampaignConfig& config, const CampaignResult& result) {
    nlohmann::json j;
    j["prng"] = kPrngId;
    j["seed"] = config.seed;
    nlohmann::json sum;
    for (int s = 0; s < kSeverityCount; ++s)
        sum[severity_name(static_cast<Severity>(s))] = result.summary.by_severity[s];
    j["summary"] = {{"graphs", result.summary.graphs},
                    {"findings", result.summary.findings},
                    {"by-severity", sum},
                    {"exit-code", result.summary.exit_code}};
    nlohmann::json rows = nlohmann::json::array();
    char hash_hex[17];
    for (const Finding& f : result.findings) {
        std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                      static_cast<unsigned long long>(f.graph_hash));
        nlohmann::json row;
        row["graph-hash"] = hash_hex;
        row["graph"] = f.graph_text;
        row["n"] = f.n;
        row["m"] = f.m;
        row["theorem"] = f.theorem;
        row["target"] = f.target;
        if (f.has_values) {
            row["gamma-before"] = f.gamma_before;
            row["gamma-after"] = f.gamma_after;
            if (f.lower) row["lower"] = *f.lower;
            if (f.upper) row["upper"] = *f.upper;
            row["lower-tight"] = f.lower_tight;
            row["upper-tight"] = f.upper_tight;
            row["violated"] = f.violated;
        }
        if (!f.constructions.empty()) {
            nlohmann::json cons = nlohmann::json::array();
            for (const auto& c : f.constructions)
                cons.push_back({{"case", c.case_label},
                                {"direction", c.forward ? "forward" : "reverse"},
                                {"size", c.size},
                                {"valid", c.valid}});
            row["constructions"] = std::move(cons);
        }
        row["severity"] = severity_name(f.severity);
        if (!f.detail.empty()) row["detail"] = f.detail;
        rows.push_back(std::move(row));
    }
    j["findings"] = std::move(rows);
    out << j.dump(2) << "\n";
}

std::string report_to_json_text(const BoundReport& report) {
    nlohmann::json j;
    j["theorem"] = theorem_token(report.theorem);
    j["target"] = report.target.to_string();
    j["applicable"] = report.applicable;
    if (!report.applicable) {
        j["reason"] = report.not_applicable_reason;
        return j.dump(2);
    }
    j["gamma-before"] = report.gamma_before;
    j["gamma-after"] = report.gamma_after;
    if (report.lower) j["lower"] = *report.lower;
    j["upper"] = report.upper;
    j["lower-tight"] = report.lower_tight;
    j["upper-tight"] = report.upper_tight;
    j["violated"] = report.violated;
    std::string detail;
    j["severity"] = severity_name(classify_report(report, &detail));
    if (!detail.empty()) j["detail"] = detail;
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& c : report.constructions) {
        cons.push_back({{"case", c.case_label},
                        {"direction", c.forward ? "forward" : "reverse"},
                        {"candidate", c.candidate},
                        {"valid", c.valid}});
    }
    j["constructions"] = std::move(cons);
    return j.dump(2);
}

std::string bc_to_json_text(const BoutrigChellaliReport& report) {
    nlohmann::json j;
    j["theorem"] = "bc";
    j["applicable"] = report.applicable;
    if (!report.applicable) {
        j["reason"] = report.not_applicable_reason;
        return j.dump(2);
    }
    j["n"] = report.n;
    j["gamma-st"] = report.gamma_st;
    j["gamma-w"] = report.gamma_w;
    j["max-degree"] = report.max_degree;
    j["lhs"] = {{"num", report.lhs_num}, {"den", report.lhs_den}};
    j["holds"] = report.holds;
    j["equality"] = report.equality;
    return j.dump(2);
}

void write_outputs(const CampaignConfig& config, const CampaignResult& result) {
    if (!config.csv_path.empty()) {
        std::ofstream out(config.csv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + config.csv_path);
        write_csv(out, config, result.findings);
    }
    if (!config.json_path.empty()) {
        std::ofstream out(config.json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + config.json_path);
        write_json(out, config, result);
    }
}

}  // namespace stdom
