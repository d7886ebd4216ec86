#include "hribench/sim/handover.hpp"

#include <algorithm>

namespace hribench::sim {

SensorTriple SensorTriple::classify(const ScenarioConfig& cfg, int gaze_deg, int pressure,
                                    int location_mm) {
    SensorTriple t;
    t.gaze_deg = gaze_deg;
    t.pressure = pressure;
    t.location_mm = location_mm;
    t.gaze_ok = gaze_deg >= 0 && gaze_deg <= cfg.gaze_ok_max_deg;
    t.pressure_ok = pressure >= cfg.pressure_ok_min && pressure <= cfg.pressure_max;
    t.location_ok = location_mm >= cfg.location_min_mm && location_mm <= cfg.location_ok_max_mm;
    return t;
}

namespace {

using S = HandoverController::State;

const std::vector<HandoverController::Transition> kTransitions = {
    {"h.t01", S::idle, S::picking, "activation command"},
    {"h.t02", S::idle, S::disengaged, "bored while idle"},
    {"h.t03", S::picking, S::aborting, "bored"},
    {"h.t04", S::picking, S::holding_out, "grasp complete"},
    {"h.t05", S::holding_out, S::aborting, "bored"},
    {"h.t06", S::holding_out, S::signaling, "arm extended"},
    {"h.t07", S::signaling, S::await_ready, "signal emitted"},
    {"h.t08", S::await_ready, S::sensing, "readiness command"},
    {"h.t09", S::await_ready, S::timed_out, "patience expired"},
    {"h.t10", S::await_ready, S::aborting, "bored"},
    {"h.t11", S::sensing, S::deciding, "reading received"},
    {"h.t12", S::sensing, S::timed_out, "sensing window expired"},
    {"h.t13", S::sensing, S::aborting, "bored"},
    {"h.t14", S::deciding, S::releasing, "reading all ok"},
    {"h.t15", S::deciding, S::discarding, "reading not ok"},
    {"h.t16", S::deciding, S::aborting, "bored"},
    {"h.t17", S::releasing, S::leg_done, "release complete"},
    {"h.t18", S::discarding, S::leg_done, "discard complete"},
    {"h.t19", S::timed_out, S::discarding, "dispose after timeout"},
    {"h.t20", S::aborting, S::discarding, "dispose after abort"},
    {"h.t21", S::leg_done, S::idle, "await next activation"},
    {"h.t22", S::leg_done, S::finished, "four legs released"},
};

const std::vector<std::string> kStateNames = {
    "idle",      "picking",    "holding_out", "signaling", "await_ready",
    "sensing",   "deciding",   "releasing",   "discarding", "timed_out",
    "aborting",  "leg_done",   "finished",    "disengaged",
};

// Motion durations in ticks.
constexpr int kGraspTicks = 20;
constexpr int kExtendTicks = 15;
constexpr int kReleaseTicks = 10;
constexpr int kDiscardTicks = 12;
constexpr int kDecideTicks = 2;     ///< healthy decision latency
constexpr int kWithdrawTicks = 5;   ///< hand clears this long after a decision
constexpr int kHandFarMm = 600;
constexpr int kJointSpeedMradps = 240; ///< arm moves just under the limit

} // namespace

const std::vector<std::string>& HandoverController::state_names() { return kStateNames; }
const std::vector<HandoverController::Transition>& HandoverController::transitions() {
    return kTransitions;
}
std::string HandoverController::state_name(State s) {
    return kStateNames[static_cast<std::size_t>(s)];
}

HandoverController::HandoverController(const ScenarioConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), rng_(util::Rng::mix(seed, 0x48414e44)) {}

void HandoverController::take(const char* transition_id, int tick, SimulationLog& log) {
    for (const auto& t : kTransitions) {
        if (std::string_view(t.id) == transition_id) {
            log.add(tick, "robot", "state",
                    {{"from", state_name(t.from)}, {"to", state_name(t.to)}});
            log.add(tick, "robot", "branch", {{"id", t.id}});
            enter(t.to, tick, log);
            return;
        }
    }
    throw std::logic_error(std::string("unknown transition ") + transition_id);
}

void HandoverController::begin_cycle(int tick, SimulationLog& log) {
    sensed_this_cycle_ = false;
    pending_triple_.reset();
    reading_tick_ = -1;
    hand_mm_ = kHandFarMm;
    hand_withdraw_at_ = -1;
    leg_start_tick_ = tick;
    log.add(tick, "robot", "pick_started", {{"leg", legs_released_ + legs_discarded_ + 1}});
    log.add(tick, "robot", "joint_speed", {{"mradps", kJointSpeedMradps}});
    log.add(tick, "robot", "gripper_close", {{"hand_mm", hand_mm_}, {"phase", "grasp"}});
}

void HandoverController::enter(State s, int tick, SimulationLog& log) {
    state_ = s;
    switch (s) {
    case S::picking:
        begin_cycle(tick, log);
        phase_until_ = tick + kGraspTicks;
        break;
    case S::holding_out:
        log.add(tick, "robot", "joint_speed", {{"mradps", kJointSpeedMradps}});
        phase_until_ = tick + kExtendTicks;
        break;
    case S::signaling:
        log.add(tick, "robot", "signal", json::object());
        phase_until_ = tick + 1;
        break;
    case S::await_ready:
        phase_until_ = tick + cfg_.readiness_patience;
        break;
    case S::sensing:
        log.add(tick, "robot", "sense_window", json::object());
        phase_until_ = tick + cfg_.sensing_timeout;
        break;
    case S::deciding: {
        bool dawdle = cfg_.faults.late_decision && rng_.chance(cfg_.late_decision_percent);
        decision_late_ = dawdle;
        int delay = kDecideTicks;
        if (dawdle) {
            delay = cfg_.decision_threshold +
                    rng_.range(cfg_.late_extra_min, cfg_.late_extra_max);
            log.add(tick, "robot", "branch", {{"id", "h.decide_late"}});
        }
        decide_at_ = tick + delay;
        phase_until_ = -1;
        break;
    }
    case S::releasing:
        log.add(tick, "robot", "gripper_open", json::object());
        log.add(tick, "robot", "joint_speed", {{"mradps", kJointSpeedMradps}});
        phase_until_ = tick + kReleaseTicks;
        break;
    case S::discarding:
        start_discard_close(tick, log);
        break;
    case S::timed_out:
        hand_withdraw_at_ = tick + kWithdrawTicks;
        phase_until_ = tick + 1;
        break;
    case S::aborting:
        log.add(tick, "robot", "abort", json::object());
        hand_withdraw_at_ = tick + kWithdrawTicks;
        phase_until_ = tick + 1;
        break;
    case S::leg_done:
        // Reset to a fixed per-leg cadence: the arm stows and re-homes before
        // the next activation is taken.
        phase_until_ = std::max(tick + 1, leg_start_tick_ + cfg_.leg_settle);
        break;
    case S::finished:
        log.add(tick, "robot", "table_complete", {{"released", legs_released_}});
        phase_until_ = -1;
        break;
    case S::idle:
    case S::disengaged: phase_until_ = -1; break;
    }
}

void HandoverController::start_discard_close(int tick, SimulationLog& log) {
    // Discarding begins by re-gripping the leg for the retract motion. The
    // as-found code closes regardless of where the hand is; the fixed code
    // waits for the hand to clear first.
    if (!cfg_.faults.gripper_near_hand && hand_mm_ < cfg_.hand_near_mm) {
        awaiting_close_ = true;
        log.add(tick, "robot", "branch", {{"id", "h.close_deferred"}});
        discard_done_at_ = -1;
        phase_until_ = -1;
        return;
    }
    awaiting_close_ = false;
    log.add(tick, "robot", "gripper_close", {{"hand_mm", hand_mm_}, {"phase", "discard"}});
    log.add(tick, "robot", "joint_speed", {{"mradps", kJointSpeedMradps}});
    discard_done_at_ = tick + kDiscardTicks;
    phase_until_ = discard_done_at_;
}

void HandoverController::finish_decision(int tick, SimulationLog& log) {
    const SensorTriple triple = *pending_triple_;
    int latency = tick - reading_tick_;
    bool release = triple.all_ok();
    log.add(tick, "robot", "decision",
            {{"release", release},
             {"latency", latency},
             {"late", latency > cfg_.decision_threshold},
             {"code", triple.code()}});
    hand_withdraw_at_ = tick + kWithdrawTicks;
    decide_at_ = -1;
    take(release ? "h.t14" : "h.t15", tick, log);
}

void HandoverController::handle_timers(int tick, SimulationLog& log) {
    if (hand_withdraw_at_ >= 0 && tick >= hand_withdraw_at_) {
        hand_mm_ = kHandFarMm;
        hand_withdraw_at_ = -1;
    }
    if (state_ == S::deciding && decide_at_ >= 0 && tick >= decide_at_) {
        finish_decision(tick, log);
        return; // at most one transition per tick from timers
    }
    if (state_ == S::discarding && awaiting_close_ && hand_mm_ >= cfg_.hand_near_mm) {
        start_discard_close(tick, log);
        return;
    }
    if (phase_until_ < 0 || tick < phase_until_) return;
    switch (state_) {
    case S::picking: take("h.t04", tick, log); break;
    case S::holding_out: take("h.t06", tick, log); break;
    case S::signaling: take("h.t07", tick, log); break;
    case S::await_ready:
        log.add(tick, "robot", "timeout", {{"phase", "cmd"}});
        take("h.t09", tick, log);
        break;
    case S::sensing:
        log.add(tick, "robot", "timeout", {{"phase", "sense"}});
        take("h.t12", tick, log);
        break;
    case S::releasing:
        ++legs_released_;
        log.add(tick, "robot", "leg_released", {{"count", legs_released_}});
        hand_withdraw_at_ = tick + kWithdrawTicks;
        take("h.t17", tick, log);
        break;
    case S::discarding:
        ++legs_discarded_;
        log.add(tick, "robot", "leg_discarded", {{"count", legs_discarded_}});
        take("h.t18", tick, log);
        break;
    case S::timed_out: take("h.t19", tick, log); break;
    case S::aborting: take("h.t20", tick, log); break;
    case S::leg_done:
        if (legs_released_ >= 4) {
            take("h.t22", tick, log);
        } else {
            take("h.t21", tick, log);
            if (pending_requests_ > 0) {
                --pending_requests_;
                take("h.t01", tick, log);
            }
        }
        break;
    default: break;
    }
}

void HandoverController::handle_input(const HandoverInput& in, int tick, SimulationLog& log) {
    switch (in.kind) {
    case HandoverInput::Kind::request:
        log.add(tick, "robot", "request_received", json::object());
        if (state_ == S::idle) {
            take("h.t01", tick, log);
        } else if (state_ == S::finished || state_ == S::disengaged) {
            log.add(tick, "robot", "request_ignored", json::object());
        } else {
            ++pending_requests_;
            log.add(tick, "robot", "request_queued", {{"pending", pending_requests_}});
            log.add(tick, "robot", "branch", {{"id", "h.request_queued"}});
        }
        break;
    case HandoverInput::Kind::ready:
        if (state_ == S::await_ready) {
            take("h.t08", tick, log);
        } else {
            log.add(tick, "robot", "ready_ignored", json::object());
            log.add(tick, "robot", "branch", {{"id", "h.ready_ignored"}});
        }
        break;
    case HandoverInput::Kind::bored:
        log.add(tick, "robot", "bored_received", json::object());
        switch (state_) {
        case S::idle: take("h.t02", tick, log); break;
        case S::picking: take("h.t03", tick, log); break;
        case S::holding_out: take("h.t05", tick, log); break;
        case S::await_ready: take("h.t10", tick, log); break;
        case S::sensing: take("h.t13", tick, log); break;
        case S::deciding: take("h.t16", tick, log); break;
        default:
            log.add(tick, "robot", "bored_ignored", json::object());
            log.add(tick, "robot", "branch", {{"id", "h.bored_ignored"}});
            break;
        }
        break;
    case HandoverInput::Kind::reading: {
        hand_mm_ = in.triple.location_mm;
        if (state_ == S::sensing) {
            pending_triple_ = in.triple;
            reading_tick_ = tick;
            sensed_this_cycle_ = true;
            log.add(tick, "robot", "reading_latched",
                    {{"code", in.triple.code()},
                     {"gaze_deg", in.triple.gaze_deg},
                     {"pressure", in.triple.pressure},
                     {"location_mm", in.triple.location_mm},
                     {"revised", false}});
            take("h.t11", tick, log);
        } else if (state_ == S::deciding) {
            // The as-found code keeps reading the topic and decides on the
            // latest sample, so a slow decision can act on revised data.
            pending_triple_ = in.triple;
            log.add(tick, "robot", "reading_latched",
                    {{"code", in.triple.code()},
                     {"gaze_deg", in.triple.gaze_deg},
                     {"pressure", in.triple.pressure},
                     {"location_mm", in.triple.location_mm},
                     {"revised", true}});
            log.add(tick, "robot", "branch", {{"id", "h.revised_reading"}});
        } else {
            log.add(tick, "robot", "reading_ignored", {{"code", in.triple.code()}});
        }
        break;
    }
    }
}

void HandoverController::step(int tick, const std::vector<HandoverInput>& inputs,
                              SimulationLog& log) {
    if (tick == 0) {
        log.add(tick, "robot", "controller_started", json::object());
        log.add(tick, "robot", "branch", {{"id", "h.init"}});
    }
    handle_timers(tick, log);
    for (const auto& in : inputs) handle_input(in, tick, log);
}

bool HandoverController::resting() const {
    if (state_ == S::finished || state_ == S::disengaged) return true;
    return state_ == S::idle && pending_requests_ == 0;
}

} // namespace hribench::sim
