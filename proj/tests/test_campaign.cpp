#include <sstream>

#include "doctest.h"
#include "stdom/campaign.hpp"
#include "stdom/gallery.hpp"

using namespace stdom;

namespace {

CampaignConfig k3_config() {
    CampaignConfig c;
    c.seed = 7;
    c.theorems = {"t21", "t22", "t23", "cor", "t24", "bc"};
    FamilySpec f;
    f.type = FamilySpec::Type::Gnp;
    f.n = 3;
    f.p = 1.0;  // K_3 every trial
    f.trials = 1;
    c.families.push_back(f);
    return c;
}

std::string csv_of(const CampaignConfig& config) {
    const auto result = run_campaign(config);
    std::ostringstream ss;
    write_csv(ss, config, result.findings);
    return ss.str();
}

}  // namespace

TEST_CASE("config round trip from JSON") {
    const auto c = CampaignConfig::from_json_text(R"({
        "seed": 99,
        "theorems": ["t21", "bc"],
        "families": [
            {"type": "gnp", "n": 7, "p": 0.25, "trials": 4},
            {"type": "tree", "n": 5, "trials": 2},
            {"type": "exhaustive", "max_n": 3}
        ],
        "csv": "out.csv"
    })");
    CHECK(c.seed == 99);
    CHECK(c.theorems.size() == 2);
    REQUIRE(c.families.size() == 3);
    CHECK(c.families[0].p == 0.25);
    CHECK(c.families[2].max_n == 3);
    CHECK(c.csv_path == "out.csv");

    CHECK_THROWS(CampaignConfig::from_json_text(R"({"theorems": ["t99"]})"));
    CHECK_THROWS(CampaignConfig::from_json_text(
        R"({"families": [{"type": "gnp", "n": 80, "p": 0.5}]})"));
    CHECK_THROWS(CampaignConfig::from_json_text("not json"));
}

TEST_CASE("empty family list gives an all-zero summary") {
    CampaignConfig c;
    const auto result = run_campaign(c);
    CHECK(result.findings.empty());
    CHECK(result.summary.graphs == 0);
    CHECK(result.summary.findings == 0);
    for (auto count : result.summary.by_severity) CHECK(count == 0);
    CHECK(result.summary.exit_code == 0);
}

TEST_CASE("K_3 campaign: one t24 bound violation per vertex, still exit 0") {
    const auto result = run_campaign(k3_config());
    int t24_violations = 0;
    for (const auto& f : result.findings)
        if (f.theorem == "t24") {
            CHECK(f.severity == Severity::BoundViolation);
            CHECK(f.violated);
            CHECK(f.gamma_after == 1);
            CHECK(*f.upper == 0);
            ++t24_violations;
        }
    CHECK(t24_violations == 3);
    CHECK(result.summary.by_severity[static_cast<int>(Severity::Critical)] == 0);
    CHECK(result.summary.exit_code == 0);
}

TEST_CASE("exhaustive n <= 4 stays free of critical findings") {
    CampaignConfig c;
    c.theorems = {"t21", "t22", "t23", "cor", "t24", "bc"};
    FamilySpec f;
    f.type = FamilySpec::Type::Exhaustive;
    f.max_n = 4;
    c.families.push_back(f);
    const auto result = run_campaign(c);
    CHECK(result.summary.graphs == 1 + 2 + 8 + 64);
    CHECK(result.summary.by_severity[static_cast<int>(Severity::Critical)] == 0);
    CHECK(result.summary.exit_code == 0);
    // the refutable constructions fire even at this scale (diamond instances)
    CHECK(result.summary.by_severity[static_cast<int>(Severity::ConstructionInvalid)] > 0);
    bool saw_tightness = false;
    for (const auto& f : result.findings) saw_tightness |= f.severity == Severity::TightnessHit;
    CHECK(saw_tightness);
}

TEST_CASE("isolated vertices surface as info rows, not silent skips") {
    CampaignConfig c;
    c.theorems = {"t21"};
    FamilySpec f;
    f.type = FamilySpec::Type::Exhaustive;
    f.max_n = 3;
    c.families.push_back(f);
    const auto result = run_campaign(c);
    bool saw_skip = false;
    for (const auto& fnd : result.findings)
        if (!fnd.has_values && fnd.theorem == "t21")
            saw_skip = fnd.detail.find("isolated") != std::string::npos;
    CHECK(saw_skip);
}

TEST_CASE("a corpus containing a deletion-ceiling refutation exits nonzero") {
    // seed 1 deterministically generates trees on 8 vertices that beat the
    // t21 ceiling; those findings must surface as critical and flip the exit
    CampaignConfig c;
    c.seed = 1;
    c.theorems = {"t21"};
    FamilySpec f;
    f.type = FamilySpec::Type::Tree;
    f.n = 8;
    f.trials = 20;
    c.families.push_back(f);
    const auto result = run_campaign(c);
    CHECK(result.summary.by_severity[static_cast<int>(Severity::Critical)] == 4);
    CHECK(result.summary.exit_code == 1);
    for (const auto& fnd : result.findings)
        if (fnd.severity == Severity::Critical) {
            CHECK(fnd.theorem == "t21");
            CHECK(fnd.violated);
            CHECK(fnd.gamma_after > *fnd.upper);
        }
}

TEST_CASE("campaign output is byte-identical across runs and thread counts") {
    CampaignConfig a = k3_config();
    FamilySpec extra;
    extra.type = FamilySpec::Type::Gnp;
    extra.n = 8;
    extra.p = 0.4;
    extra.trials = 25;
    a.families.push_back(extra);
    CampaignConfig b = a;
    a.threads = 1;
    b.threads = 4;
    const std::string csv_a = csv_of(a);
    const std::string csv_b = csv_of(b);
    CHECK(csv_a == csv_b);
    CHECK(csv_a == csv_of(a));
    CHECK(csv_a.find("prng=splitmix64 seed=7") != std::string::npos);
    CHECK(csv_a.find("graph-hash,n,m,theorem,target,") != std::string::npos);
}

TEST_CASE("severity classification") {
    BoundReport r;
    r.theorem = TheoremId::T24;
    r.applicable = true;
    r.violated = true;
    std::string why;
    CHECK(classify_report(r, &why) == Severity::BoundViolation);
    r.theorem = TheoremId::T21;
    CHECK(classify_report(r, nullptr) == Severity::Critical);

    BoundReport tight;
    tight.applicable = true;
    tight.upper = 3;
    tight.gamma_after = 3;
    tight.upper_tight = true;
    CHECK(classify_report(tight, nullptr) == Severity::TightnessHit);

    BoundReport bad_forward;
    bad_forward.applicable = true;
    TheoremConstruction c;
    c.forward = true;
    c.valid = false;
    c.case_label = "x";
    bad_forward.constructions.push_back(c);
    CHECK(classify_report(bad_forward, nullptr) == Severity::ConstructionInvalid);
    std::string note;
    c.forward = false;
    bad_forward.constructions.push_back(c);
    CHECK(classify_report(bad_forward, &note) == Severity::ConstructionInvalid);
    CHECK(note.find("reverse") != std::string::npos);
}

TEST_CASE("report JSON has the advertised fields") {
    const auto report = verify_theorem(complete(3), Target::vertex(0), TheoremId::T24);
    const std::string text = report_to_json_text(report);
    for (const char* key : {"\"theorem\"", "\"target\"", "\"gamma-before\"", "\"gamma-after\"",
                            "\"upper\"", "\"violated\"", "\"constructions\""})
        CHECK(text.find(key) != std::string::npos);
    const std::string bc = bc_to_json_text(check_boutrig_chellali(path(3)));
    CHECK(bc.find("\"equality\": true") != std::string::npos);
}

TEST_CASE("findings carry construction outcomes, sizes included") {
    const auto result = run_campaign(k3_config());
    bool saw = false;
    for (const auto& f : result.findings)
        if (f.theorem == "t24") {
            REQUIRE(f.constructions.size() == 1);
            CHECK(f.constructions[0].case_label == "T2.4 witness");
            CHECK(f.constructions[0].size == 1);  // |D'| = 1 > ceiling 0 on K_3
            CHECK(f.constructions[0].valid);
            saw = true;
        }
    CHECK(saw);
    std::ostringstream js;
    write_json(js, k3_config(), result);
    CHECK(js.str().find("\"case\": \"T2.4 witness\"") != std::string::npos);
}
