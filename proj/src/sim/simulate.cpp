#include "hribench/sim/simulate.hpp"

#include <algorithm>

namespace hribench::sim {

std::string scenario_name(Scenario s) {
    return s == Scenario::handover ? "handover" : "homecare";
}

Scenario scenario_from_name(const std::string& name) {
    if (name == "handover") return Scenario::handover;
    if (name == "homecare") return Scenario::homecare;
    throw SimulationError("unknown scenario '" + name + "'");
}

namespace {

int required_int(const gen::Action& a, const std::string& name) {
    const gen::Param* p = a.find(name);
    if (!p || p->kind != gen::Param::Kind::int_value)
        throw SimulationError("action '" + a.label + "' needs integer param '" + name + "'");
    return p->value;
}

std::string required_word(const gen::Action& a, const std::string& name) {
    const gen::Param* p = a.find(name);
    if (!p || p->kind != gen::Param::Kind::word_value)
        throw SimulationError("action '" + a.label + "' needs word param '" + name + "'");
    return p->word;
}

void validate_handover_action(const gen::Action& a) {
    using gen::Actor;
    if (a.actor == Actor::human) {
        if (a.label != "request" && a.label != "ready" && a.label != "bored")
            throw SimulationError("unknown human action '" + a.label + "'");
        return;
    }
    if (a.actor == Actor::sensors) {
        if (a.label == "set_gaze") {
            required_word(a, "class");
            required_int(a, "angle_deg");
        } else if (a.label == "set_pressure") {
            required_word(a, "class");
            required_int(a, "level");
        } else if (a.label == "set_location") {
            required_word(a, "class");
            required_int(a, "dist_mm");
        } else {
            throw SimulationError("unknown sensors action '" + a.label + "'");
        }
        return;
    }
    throw SimulationError("actor '" + gen::actor_name(a.actor) + "' does not belong to this scenario");
}

void validate_homecare_action(const gen::Action& a) {
    using gen::Actor;
    if (a.actor == Actor::human) {
        if (a.label != "command") throw SimulationError("unknown human action '" + a.label + "'");
        required_word(a, "word");
        required_int(a, "speed_mmps");
        return;
    }
    if (a.actor == Actor::dog) {
        if (a.label != "dog_near" && a.label != "dog_contact" && a.label != "dog_leave")
            throw SimulationError("unknown dog action '" + a.label + "'");
        return;
    }
    throw SimulationError("actor '" + gen::actor_name(a.actor) + "' does not belong to this scenario");
}

json params_payload(const gen::Action& a) {
    json payload = json::object();
    for (const auto& p : a.params) {
        if (p.kind == gen::Param::Kind::int_value) payload[p.name] = p.value;
        else if (p.kind == gen::Param::Kind::word_value) payload[p.name] = p.word;
    }
    return payload;
}

/// Latched sensor channels feeding the handover controller. A reading is
/// published two ticks after the channels are complete while the robot's
/// sensing window is open; any later channel change republishes.
struct SensorBank {
    bool has_gaze = false, has_pressure = false, has_location = false;
    int gaze_deg = 0, pressure = 0, location_mm = 0;
    bool window_open = false; ///< sensing or deciding
    bool dirty = false;
    int publish_at = -1;
    int out_gaze = 0, out_pressure = 0, out_location = 0; ///< values armed for publishing

    bool complete() const { return has_gaze && has_pressure && has_location; }
    void arm_if_ready(int tick) {
        if (window_open && complete() && dirty) {
            publish_at = tick + 2;
            out_gaze = gaze_deg;
            out_pressure = pressure;
            out_location = location_mm;
            dirty = false;
        }
    }
    void clear() {
        has_gaze = has_pressure = has_location = false;
        window_open = false;
        dirty = false;
        publish_at = -1;
    }
};

SimulationLog simulate_handover(const ScenarioConfig& cfg, const gen::ConcreteTest& test) {
    SimulationLog log;
    log.scenario = "handover";
    log.test_id = test.id;
    log.generator = gen::generator_name(test.generator);
    log.seed = test.seed;
    log.profile = cfg.profile_name();

    HandoverController controller(cfg, test.seed);
    SensorBank bank;

    std::size_t next_action = 0;
    const int budget = cfg.handover_budget;
    int tick = 0;
    for (; tick <= budget; ++tick) {
        std::vector<HandoverInput> inputs;

        if (bank.publish_at == tick) {
            SensorTriple t =
                SensorTriple::classify(cfg, bank.out_gaze, bank.out_pressure, bank.out_location);
            log.add(tick, "sensors", "published",
                    {{"code", t.code()},
                     {"gaze_deg", t.gaze_deg},
                     {"pressure", t.pressure},
                     {"location_mm", t.location_mm}});
            inputs.push_back(HandoverInput{HandoverInput::Kind::reading, t});
            bank.publish_at = -1;
        }

        while (next_action < test.actions.size() && test.actions[next_action].offset == tick) {
            const gen::Action& a = test.actions[next_action++];
            log.add(tick, gen::actor_name(a.actor), a.label, params_payload(a));
            if (a.actor == gen::Actor::human) {
                HandoverInput in;
                if (a.label == "request") in.kind = HandoverInput::Kind::request;
                else if (a.label == "ready") in.kind = HandoverInput::Kind::ready;
                else in.kind = HandoverInput::Kind::bored;
                inputs.push_back(in);
            } else {
                if (a.label == "set_gaze") {
                    bank.gaze_deg = required_int(a, "angle_deg");
                    bank.has_gaze = true;
                } else if (a.label == "set_pressure") {
                    bank.pressure = required_int(a, "level");
                    bank.has_pressure = true;
                } else {
                    bank.location_mm = required_int(a, "dist_mm");
                    bank.has_location = true;
                }
                bank.dirty = true;
                bank.arm_if_ready(tick);
            }
        }

        std::size_t before = log.events.size();
        controller.step(tick, inputs, log);

        // React to what the controller just did.
        for (std::size_t i = before; i < log.events.size(); ++i) {
            const std::string& label = log.events[i].label;
            if (label == "sense_window") {
                bank.window_open = true;
                bank.dirty = true;
                bank.arm_if_ready(tick);
            } else if (label == "decision" || label == "timeout" || label == "abort") {
                bank.clear();
            }
        }

        bool script_done = next_action >= test.actions.size();
        if (script_done && controller.resting() && bank.publish_at < 0) {
            log.end_reason = "quiescent";
            log.end_tick = tick;
            return log;
        }
    }
    log.end_reason = "budget";
    log.end_tick = budget;
    return log;
}

SimulationLog simulate_homecare(const ScenarioConfig& cfg, const gen::ConcreteTest& test) {
    SimulationLog log;
    log.scenario = "homecare";
    log.test_id = test.id;
    log.generator = gen::generator_name(test.generator);
    log.seed = test.seed;
    log.profile = cfg.profile_name();

    HomecareController controller(cfg, test.seed);

    std::size_t next_action = 0;
    const int budget = cfg.homecare_budget;
    int tick = 0;
    for (; tick <= budget; ++tick) {
        std::vector<HomecareInput> inputs;
        while (next_action < test.actions.size() && test.actions[next_action].offset == tick) {
            const gen::Action& a = test.actions[next_action++];
            log.add(tick, gen::actor_name(a.actor), a.label, params_payload(a));
            HomecareInput in;
            if (a.label == "command") {
                in.kind = HomecareInput::Kind::command;
                in.word = required_word(a, "word");
                in.speed_mmps = required_int(a, "speed_mmps");
            } else if (a.label == "dog_near") {
                in.kind = HomecareInput::Kind::dog_near;
            } else if (a.label == "dog_contact") {
                in.kind = HomecareInput::Kind::dog_contact;
            } else {
                in.kind = HomecareInput::Kind::dog_leave;
            }
            inputs.push_back(std::move(in));
        }

        controller.step(tick, inputs, log);

        bool script_done = next_action >= test.actions.size();
        if (script_done && controller.resting()) {
            log.end_reason = "quiescent";
            log.end_tick = tick;
            return log;
        }
    }
    log.end_reason = "budget";
    log.end_tick = budget;
    return log;
}

} // namespace

SimulationLog simulate(Scenario scenario, const ScenarioConfig& cfg,
                       const gen::ConcreteTest& test) {
    gen::validate_actions(test.actions);
    for (const auto& a : test.actions) {
        for (const auto& p : a.params)
            if (p.symbolic())
                throw SimulationError("symbolic param '" + p.name + "' reached the simulator");
        if (scenario == Scenario::handover) validate_handover_action(a);
        else validate_homecare_action(a);
    }
    return scenario == Scenario::handover ? simulate_handover(cfg, test)
                                          : simulate_homecare(cfg, test);
}

const std::vector<std::string>& branch_points(Scenario scenario) {
    static const std::vector<std::string> handover = [] {
        std::vector<std::string> v{"h.init"};
        for (const auto& t : HandoverController::transitions()) v.push_back(t.id);
        v.insert(v.end(), {"h.request_queued", "h.ready_ignored", "h.bored_ignored",
                           "h.revised_reading", "h.decide_late", "h.close_deferred"});
        return v;
    }();
    static const std::vector<std::string> homecare = [] {
        std::vector<std::string> v{"c.init"};
        for (const auto& f : HomecareController::fsms())
            for (const auto& s : f.states)
                if (s.transition[0] != '\0') v.push_back(s.transition);
        v.insert(v.end(), {"c.cmd_invalid", "c.task_limit", "c.cmd_dropped_fallen",
                           "c.laser_halt", "c.laser_resume", "c.fall", "c.next_command",
                           "c.return_started", "c.return_preempted", "c.docked",
                           "c.speed_uncapped", "c.speed_clamped"});
        return v;
    }();
    return scenario == Scenario::handover ? handover : homecare;
}

const std::vector<std::string>& fixed_profile_branch_points(Scenario scenario) {
    static const std::vector<std::string> handover{"h.close_deferred"};
    static const std::vector<std::string> homecare{"c.speed_clamped"};
    return scenario == Scenario::handover ? handover : homecare;
}

StructuralReport structural_selfcheck(Scenario scenario) {
    StructuralReport report;
    report.scenario = scenario_name(scenario);
    if (scenario == Scenario::handover) {
        int states = static_cast<int>(HandoverController::state_names().size());
        int transitions = static_cast<int>(HandoverController::transitions().size());
        report.state_counts = {states};
        report.transition_counts = {transitions};
        if (states != 14 || transitions != 22)
            throw std::logic_error("handover machine must have 14 states and 22 transitions");
        for (const auto& t : HandoverController::transitions()) {
            if (HandoverController::state_name(t.from).empty())
                throw std::logic_error("transition from unknown state");
            report.details.push_back(std::string(t.id) + ": " +
                                     HandoverController::state_name(t.from) + " -> " +
                                     HandoverController::state_name(t.to) + " (" + t.on + ")");
        }
    } else {
        const std::vector<int> expect_states = {5, 6, 3, 3, 2};
        const std::vector<int> expect_transitions = {4, 5, 2, 2, 1};
        const auto& machines = HomecareController::fsms();
        if (machines.size() != 5) throw std::logic_error("expected five motion machines");
        for (std::size_t i = 0; i < machines.size(); ++i) {
            int states = static_cast<int>(machines[i].states.size());
            int transitions = machines[i].transition_count();
            report.state_counts.push_back(states);
            report.transition_counts.push_back(transitions);
            if (states != expect_states[i] || transitions != expect_transitions[i])
                throw std::logic_error(std::string("machine '") + machines[i].name +
                                       "' has the wrong shape");
            report.details.push_back(std::string(machines[i].name) + ": " +
                                     std::to_string(states) + " states, " +
                                     std::to_string(transitions) + " transitions");
        }
    }
    report.branch_point_count = static_cast<int>(branch_points(scenario).size());
    return report;
}

} // namespace hribench::sim
