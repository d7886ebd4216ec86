#pragma once

#include "hribench/verdicts/monitors.hpp"

#include <set>

namespace hribench::verdicts {

struct CodeCoverage {
    std::set<std::string> covered; ///< branch point ids hit by the run
    int total = 0;
    double percent = 0.0;
};

/// Branch coverage over the scenario's enumerated branch points.
CodeCoverage code_coverage(const sim::SimulationLog& log, sim::Scenario scenario);

/// Human-robot interaction subgroups (1..14 / 1..6). Every matching subgroup
/// is reported; a log matching nothing maps to the fallback subgroup.
std::set<int> classify_cross_product(const sim::SimulationLog& log, sim::Scenario scenario);

int subgroup_count(sim::Scenario scenario); ///< 14 or 6

} // namespace hribench::verdicts
