#pragma once

#include "hribench/scen/scenario.hpp"
#include "hribench/verdicts/report.hpp"

#include <filesystem>

namespace hribench::cli {

namespace fs = std::filesystem;

struct CampaignSpec {
    sim::Scenario scenario = sim::Scenario::handover;
    gen::Generator method = gen::Generator::random;
    int count = 0; ///< 0 = scenario default (160 handover, 50 home care)
    std::uint64_t base_seed = 1;
    std::string profile = "as-found";
    int jobs = 1;
    fs::path out = ".";

    int effective_count() const;
};

/// Abstract tests for the campaign's method, deduplicated by action
/// sequence. Per-test generation failures are reported as warnings, not
/// errors.
std::vector<gen::AbstractTest> abstract_tests(const CampaignSpec& spec,
                                              std::vector<std::string>* warnings);

/// Concrete campaign in memory: test i is abstract[i mod n] concretized with
/// seed i (the test number).
std::vector<gen::ConcreteTest> concrete_campaign(const CampaignSpec& spec,
                                                 std::vector<std::string>* warnings);

struct GenOutcome {
    int written = 0;
    fs::path dir;
    std::vector<std::string> warnings;
};
/// Writes tests/<scenario>/<method>/NNN.test under spec.out.
GenOutcome cmd_gen(const CampaignSpec& spec);

struct RunOutcome {
    int ok = 0;
    int failed = 0;
    fs::path dir;
    std::vector<std::string> warnings;
};
/// Simulates every .test in test_dir (lexicographic order), one fresh
/// simulation per test, up to `jobs` in parallel. Logs land in log_dir as
/// <stem>.jsonl. A failing test is recorded and skipped.
RunOutcome cmd_run(const fs::path& test_dir, const fs::path& log_dir, sim::Scenario scenario,
                   const sim::ScenarioConfig& cfg, int jobs);

struct ReportOutcome {
    verdicts::CampaignReport report;
    std::vector<std::string> warnings;
};
/// Collects every .jsonl log (lexicographic order) into campaign.json,
/// campaign.csv and curve.csv under out_dir. Corrupt logs are skipped with a
/// warning.
ReportOutcome cmd_report(const fs::path& log_dir, const fs::path& out_dir,
                         sim::Scenario scenario, const sim::ScenarioConfig& cfg);

} // namespace hribench::cli
