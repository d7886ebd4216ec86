#pragma once

#include "hribench/gen/generators.hpp"
#include "hribench/sim/simulate.hpp"

namespace hribench::scen {

/// Everything a campaign needs to drive one scenario: the controllable
/// vocabulary, the agent model, the automata model with its query suite, and
/// the sampling alphabet.
struct ScenarioDef {
    sim::Scenario scenario = sim::Scenario::handover;
    gen::VocabularySpec vocabulary;
    gen::BdiModelSpec bdi;
    gen::McModelSpec mc;
    std::vector<std::string> queries; ///< shipped reachability suite, one per entry
    gen::ActionAlphabet alphabet;
    int random_max_len = 12;
    int default_count = 160;
};

const ScenarioDef& handover();
const ScenarioDef& homecare();
const ScenarioDef& get(sim::Scenario s);

/// The agent-exploration campaign: belief sets in injection order. The
/// handover list is a fixed curated recipe; the home-care list is a seeded
/// sample of command sequences over the five controls.
std::vector<bdi::BeliefSet> bdi_campaign_sets(sim::Scenario s, std::uint64_t seed);

std::vector<bdi::BeliefSet> handover_campaign_sets();
std::vector<bdi::BeliefSet> homecare_campaign_sets(std::uint64_t seed);

/// Evaluates a suite query's predicate against the counters derived from a
/// simulation log (variables only; the suite never tests raw locations).
bool target_reached(const ScenarioDef& def, const std::string& query_text,
                    const sim::SimulationLog& log);

/// Counters extracted from a log, keyed like the model variables.
std::map<std::string, int> log_stats(sim::Scenario scenario, const sim::SimulationLog& log);

} // namespace hribench::scen
