#pragma once

#include "hribench/gen/test_ir.hpp"
#include "hribench/sim/handover.hpp"
#include "hribench/sim/homecare.hpp"

namespace hribench::sim {

enum class Scenario { handover, homecare };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Runs one concrete test against a scenario. Virtual time advances tick by
/// tick; environment processes deliver the test's actions at their offsets;
/// the run ends at the budget or at quiescence. Deterministic in
/// (scenario, config, test).
SimulationLog simulate(Scenario scenario, const ScenarioConfig& cfg,
                       const gen::ConcreteTest& test);

/// Every coverage branch point of a scenario, in a stable order.
const std::vector<std::string>& branch_points(Scenario scenario);

/// Branch points only reachable with the fixed profile (guard code that the
/// as-found faults bypass). The as-found coverage ceiling excludes these.
const std::vector<std::string>& fixed_profile_branch_points(Scenario scenario);

struct StructuralReport {
    std::string scenario;
    std::vector<int> state_counts;
    std::vector<int> transition_counts;
    int branch_point_count = 0;
    std::vector<std::string> details;
};

/// Asserts the controllers' machine sizes against their specification and
/// enumerates the branch points used for code coverage. Throws on mismatch.
StructuralReport structural_selfcheck(Scenario scenario);

} // namespace hribench::sim
