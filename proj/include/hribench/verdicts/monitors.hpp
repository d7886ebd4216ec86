#pragma once

#include "hribench/sim/config.hpp"
#include "hribench/sim/log.hpp"
#include "hribench/sim/simulate.hpp"

namespace hribench::verdicts {

enum class Verdict { P, F, NC };

std::string verdict_name(Verdict v);

struct Requirement {
    int id = 0;
    bool safety = false;
    std::string text;
};

/// The monitored requirements of a scenario, in id order (1..6 / 1..4).
const std::vector<Requirement>& requirements(sim::Scenario scenario);

/// Scans the log once per requirement monitor. P if every triggered
/// obligation held, F if any was violated, NC if the precondition never
/// triggered.
std::vector<Verdict> judge(const sim::SimulationLog& log, sim::Scenario scenario,
                           const sim::ScenarioConfig& cfg = sim::ScenarioConfig::as_found());

// --- Log digests shared by monitors and coverage --------------------------

/// One activation-to-completion pass of the handover protocol.
struct LegCycle {
    int start_tick = 0;
    bool sensed = false;
    int first_reading_tick = -1;
    int first_code = -1; ///< classes of the first reading (gaze<<2|pressure<<1|location)
    int decision_tick = -1;
    bool decision_release = false;
    bool released = false;
    bool discarded = false;
    bool timed_out = false;
    bool aborted = false;
    bool completed = false; ///< reached the end of the pass
};

struct HandoverDigest {
    int requests_issued = 0;
    bool bored_seen = false;
    std::vector<LegCycle> cycles;
    int end_tick = 0;
};

HandoverDigest digest_handover(const sim::SimulationLog& log);

struct StationaryInterval {
    int from = 0;
    int to = 0;
    bool outside_dock = true;
};

struct HomecareDigest {
    std::map<std::string, int> issued;  ///< per valid word
    int issued_invalid = 0;
    std::map<std::string, int> completed;
    int pickups = 0;
    int deliveries = 0;
    bool fallen = false;
    int fall_tick = -1;
    bool moved = false;
    std::vector<StationaryInterval> stuck; ///< halted/fallen spans away from the dock
    struct IdleTrigger {
        int tick;
        bool resolved; ///< docked or a fresh command arrived before the next trigger
    };
    std::vector<IdleTrigger> idle_triggers;
    std::vector<int> speeds_mmps;
    int end_tick = 0;
};

HomecareDigest digest_homecare(const sim::SimulationLog& log);

} // namespace hribench::verdicts
