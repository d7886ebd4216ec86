#pragma once

#include "hribench/verdicts/coverage.hpp"

namespace hribench::verdicts {

struct TestReport {
    std::string scenario;
    int id = 0;
    std::string generator;
    std::uint64_t seed = 0;
    CodeCoverage coverage;
    std::vector<Verdict> verdicts;
    std::set<int> subgroups;
};

TestReport report_for(const sim::SimulationLog& log, sim::Scenario scenario,
                      const sim::ScenarioConfig& cfg = sim::ScenarioConfig::as_found());

/// Whole-campaign view: accumulated coverage in test order, verdict counts
/// and subgroup hit counts.
struct CampaignReport {
    std::string scenario;
    std::vector<TestReport> tests;            ///< in the given order
    std::vector<double> accumulated_percent;  ///< non-decreasing by construction
    std::map<int, std::array<int, 3>> requirement_counts; ///< id -> {P, F, NC}
    std::map<int, int> subgroup_hits;                     ///< subgroup -> tests hitting it
    double final_accumulated = 0.0;
};

/// Order-respecting accumulation. All reports must come from one scenario.
CampaignReport accumulate(const std::vector<TestReport>& tests);

std::string to_json(const CampaignReport& report);
/// One row per test: id, generator, seed, coverage, verdicts, subgroups.
std::string to_csv(const CampaignReport& report);
/// Accumulated-coverage curve: test index, per-test percent, accumulated.
std::string curve_csv(const CampaignReport& report);

} // namespace hribench::verdicts
