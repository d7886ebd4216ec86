#include "hribench/verdicts/monitors.hpp"

namespace hribench::verdicts {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::P: return "P";
    case Verdict::F: return "F";
    case Verdict::NC: return "NC";
    }
    return "?";
}

const std::vector<Requirement>& requirements(sim::Scenario scenario) {
    static const std::vector<Requirement> handover = {
        {1, false, "a leg is released or discarded within the decision threshold of a reading"},
        {2, false, "a ready reading leads to the leg being released"},
        {3, false, "a not-ready reading never leads to a release"},
        {4, false, "every activated handover ends in a release or a discard"},
        {5, true, "the gripper never closes while the hand is too close"},
        {6, true, "joint speed stays below the limit from the start"},
    };
    static const std::vector<Requirement> homecare = {
        {1, false, "food picked up at the fridge eventually reaches the table"},
        {2, false, "an idle robot goes to or stays at the recharge dock"},
        {3, true, "base motion speed stays below the limit"},
        {4, false, "the robot never stays put away from the dock for long"},
    };
    return scenario == sim::Scenario::handover ? handover : homecare;
}

HandoverDigest digest_handover(const sim::SimulationLog& log) {
    HandoverDigest d;
    d.end_tick = log.end_tick;
    LegCycle* open = nullptr;
    for (const auto& e : log.events) {
        if (e.source == "human") {
            if (e.label == "request") ++d.requests_issued;
            else if (e.label == "bored") d.bored_seen = true;
            continue;
        }
        if (e.source != "robot") continue;
        if (e.label == "branch" && e.payload.value("id", "") == "h.t01") {
            d.cycles.push_back(LegCycle{});
            open = &d.cycles.back();
            open->start_tick = e.tick;
        } else if (open) {
            if (e.label == "reading_latched" && !e.payload.value("revised", true) &&
                !open->sensed) {
                open->sensed = true;
                open->first_reading_tick = e.tick;
                open->first_code = e.payload.value("code", -1);
            } else if (e.label == "decision" && open->decision_tick < 0) {
                open->decision_tick = e.tick;
                open->decision_release = e.payload.value("release", false);
            } else if (e.label == "leg_released") {
                open->released = true;
            } else if (e.label == "leg_discarded") {
                open->discarded = true;
            } else if (e.label == "timeout") {
                open->timed_out = true;
            } else if (e.label == "abort") {
                open->aborted = true;
            } else if (e.label == "state") {
                const std::string to = e.payload.value("to", "");
                if (to == "idle" || to == "finished" || to == "disengaged") {
                    open->completed = true;
                    open = nullptr;
                }
            }
        }
    }
    return d;
}

HomecareDigest digest_homecare(const sim::SimulationLog& log) {
    HomecareDigest d;
    d.end_tick = log.end_tick;
    int halt_start = -1;
    for (const auto& e : log.events) {
        if (e.source == "human" && e.label == "command_received") {
            if (e.payload.value("valid", false)) ++d.issued[e.payload.value("word", "")];
            else ++d.issued_invalid;
            continue;
        }
        if (e.source != "robot") continue;
        if (e.label == "command_started" || e.label == "command_queued") {
            // A fresh order the robot takes on waives the pending dock return;
            // orders it cannot serve do not.
            if (!d.idle_triggers.empty() && !d.idle_triggers.back().resolved)
                d.idle_triggers.back().resolved = true;
        } else if (e.label == "command_completed") {
            ++d.completed[e.payload.value("word", "")];
        } else if (e.label == "food_pickup") {
            ++d.pickups;
        } else if (e.label == "food_delivered") {
            ++d.deliveries;
        } else if (e.label == "motion_started") {
            d.moved = true;
        } else if (e.label == "base_speed") {
            d.speeds_mmps.push_back(e.payload.value("mmps", 0));
        } else if (e.label == "halted") {
            halt_start = e.tick;
        } else if (e.label == "resumed") {
            if (halt_start >= 0) d.stuck.push_back({halt_start, e.tick, true});
            halt_start = -1;
        } else if (e.label == "fall") {
            d.fallen = true;
            d.fall_tick = e.tick;
            d.idle_triggers.push_back({e.tick, false});
        } else if (e.label == "return_started") {
            d.idle_triggers.push_back({e.tick, false});
        } else if (e.label == "docked") {
            if (!d.idle_triggers.empty() && !d.idle_triggers.back().resolved)
                d.idle_triggers.back().resolved = true;
        }
    }
    if (halt_start >= 0) d.stuck.push_back({halt_start, d.end_tick, true});
    if (d.fallen) d.stuck.push_back({d.fall_tick, d.end_tick, true});
    return d;
}

namespace {

std::vector<Verdict> judge_handover(const sim::SimulationLog& log,
                                    const sim::ScenarioConfig& cfg) {
    HandoverDigest d = digest_handover(log);
    std::vector<Verdict> out(6, Verdict::NC);

    // 1: decision latency, counted from the first reading of the pass.
    {
        bool triggered = false, violated = false;
        for (const auto& c : d.cycles) {
            if (!c.sensed) continue;
            triggered = true;
            if (c.decision_tick >= 0) {
                if (c.decision_tick - c.first_reading_tick > cfg.decision_threshold)
                    violated = true;
            } else if (d.end_tick > c.first_reading_tick + cfg.decision_threshold) {
                violated = true;
            }
        }
        if (triggered) out[0] = violated ? Verdict::F : Verdict::P;
    }
    // 2: ready reading implies release.
    {
        bool triggered = false, violated = false;
        for (const auto& c : d.cycles) {
            if (!c.sensed || c.first_code != 7) continue;
            triggered = true;
            if ((c.completed || c.aborted || c.discarded) && !c.released) violated = true;
        }
        if (triggered) out[1] = violated ? Verdict::F : Verdict::P;
    }
    // 3: not-ready reading forbids release.
    {
        bool triggered = false, violated = false;
        for (const auto& c : d.cycles) {
            if (!c.sensed || c.first_code == 7) continue;
            triggered = true;
            if (c.released) violated = true;
        }
        if (triggered) out[2] = violated ? Verdict::F : Verdict::P;
    }
    // 4: every activation ends in release or discard.
    {
        bool triggered = false, violated = false;
        for (const auto& c : d.cycles) {
            triggered = true;
            if (c.completed && !c.released && !c.discarded) violated = true;
        }
        if (triggered) out[3] = violated ? Verdict::F : Verdict::P;
    }
    // 5: gripper closes only with the hand clear.
    {
        bool triggered = false, violated = false;
        for (const auto& e : log.events) {
            if (e.source == "robot" && e.label == "gripper_close") {
                triggered = true;
                if (e.payload.value("hand_mm", 9999) < cfg.hand_near_mm) violated = true;
            }
        }
        if (triggered) out[4] = violated ? Verdict::F : Verdict::P;
    }
    // 6: joint speed under the limit, checked from the start of every test.
    {
        bool violated = false;
        for (const auto& e : log.events)
            if (e.source == "robot" && e.label == "joint_speed" &&
                e.payload.value("mradps", 0) >= cfg.joint_speed_limit_mradps)
                violated = true;
        out[5] = violated ? Verdict::F : Verdict::P;
    }
    return out;
}

std::vector<Verdict> judge_homecare(const sim::SimulationLog& log,
                                    const sim::ScenarioConfig& cfg) {
    HomecareDigest d = digest_homecare(log);
    std::vector<Verdict> out(4, Verdict::NC);

    // 1: pickups at the fridge must be matched by table deliveries.
    if (d.pickups > 0) out[0] = d.deliveries < d.pickups ? Verdict::F : Verdict::P;

    // 2: when work ends (dock return begins, or a fall makes the queue moot)
    // the robot must reach the dock unless a fresh order arrives first.
    if (!d.idle_triggers.empty()) {
        bool violated = false;
        for (const auto& t : d.idle_triggers)
            if (!t.resolved) violated = true;
        out[1] = violated ? Verdict::F : Verdict::P;
    }
    // 3: base speed below the limit whenever the base moves.
    if (!d.speeds_mmps.empty()) {
        bool violated = false;
        for (int v : d.speeds_mmps)
            if (v >= cfg.base_speed_limit_mmps) violated = true;
        out[2] = violated ? Verdict::F : Verdict::P;
    }
    // 4: no long stationary spell away from the dock. Tests too short to
    // judge stay unchecked.
    if (d.end_tick >= cfg.idle_limit) {
        bool violated = false;
        for (const auto& s : d.stuck)
            if (s.outside_dock && s.to - s.from >= cfg.idle_limit) violated = true;
        out[3] = violated ? Verdict::F : Verdict::P;
    }
    return out;
}

} // namespace

std::vector<Verdict> judge(const sim::SimulationLog& log, sim::Scenario scenario,
                           const sim::ScenarioConfig& cfg) {
    return scenario == sim::Scenario::handover ? judge_handover(log, cfg)
                                               : judge_homecare(log, cfg);
}

} // namespace hribench::verdicts
