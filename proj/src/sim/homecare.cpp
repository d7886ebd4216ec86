#include "hribench/sim/homecare.hpp"

#include <algorithm>

namespace hribench::sim {

const std::vector<Waypoint>& homecare_waypoints() {
    static const std::vector<Waypoint> kMap = {
        {"recharge", 500, 500}, {"fridge", 4200, 600}, {"table", 2500, 2600},
        {"sink", 800, 4300},    {"door", 4300, 4300},
    };
    return kMap;
}

const Waypoint& waypoint(const std::string& name) {
    for (const auto& w : homecare_waypoints())
        if (name == w.name) return w;
    throw std::invalid_argument("unknown waypoint '" + name + "'");
}

int isqrt64(std::int64_t v) {
    if (v < 0) throw std::invalid_argument("isqrt64 of negative value");
    std::int64_t r = 0;
    std::int64_t bit = 1ll << 62;
    while (bit > v) bit >>= 2;
    while (bit != 0) {
        if (v >= r + bit) {
            v -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return static_cast<int>(r);
}

int distance_mm(int ax, int ay, int bx, int by) {
    std::int64_t dx = bx - ax, dy = by - ay;
    return isqrt64(dx * dx + dy * dy);
}

int HomecareController::Fsm::transition_count() const {
    int n = 0;
    for (const auto& s : states)
        if (s.transition[0] != '\0') ++n;
    return n;
}

const std::vector<HomecareController::Fsm>& HomecareController::fsms() {
    using F = FsmState;
    static const std::vector<Fsm> kFsms = {
        {"feed",
         {F{"go_fridge", true, "fridge", 0, "", "c.f1.t1"},
          F{"pick_food", false, "", 20, "food_pickup", "c.f1.t2"},
          F{"go_table", true, "table", 0, "", "c.f1.t3"},
          F{"place_food", false, "", 20, "food_delivered", "c.f1.t4"},
          F{"done", false, "", 0, "", ""}}},
        {"clean",
         {F{"go_table", true, "table", 0, "", "c.f2.t1"},
          F{"pick_dishes", false, "", 20, "dishes_pickup", "c.f2.t2"},
          F{"go_sink", true, "sink", 0, "", "c.f2.t3"},
          F{"place_dishes", false, "", 20, "", "c.f2.t4"},
          F{"wipe", false, "", 25, "dishes_done", "c.f2.t5"},
          F{"done", false, "", 0, "", ""}}},
        {"fridge",
         {F{"go_fridge", true, "fridge", 0, "", "c.f3.t1"},
          F{"check_door", false, "", 15, "door_checked", "c.f3.t2"},
          F{"done", false, "", 0, "", ""}}},
        {"sink",
         {F{"go_sink", true, "sink", 0, "", "c.f4.t1"},
          F{"check_taps", false, "", 15, "taps_checked", "c.f4.t2"},
          F{"done", false, "", 0, "", ""}}},
        {"dock",
         {F{"go_recharge", true, "recharge", 0, "", "c.f5.t1"},
          F{"docked", false, "", 0, "", ""}}},
    };
    return kFsms;
}

bool HomecareController::valid_command(const std::string& word) {
    return word == "feed" || word == "clean" || word == "fridge" || word == "sink";
}

namespace {

int fsm_index(const std::string& word) {
    const auto& all = HomecareController::fsms();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (word == all[i].name) return static_cast<int>(i);
    throw std::invalid_argument("no machine for command '" + word + "'");
}

} // namespace

HomecareController::HomecareController(const ScenarioConfig& cfg, std::uint64_t)
    : cfg_(cfg) {
    const Waypoint& dock = waypoint("recharge");
    x_01mm_ = dock.x_mm * 10;
    y_01mm_ = dock.y_mm * 10;
}

void HomecareController::begin_motion(const char* target, int tick, SimulationLog& log) {
    const Waypoint& goal = waypoint(target);
    from_x_01mm_ = x_01mm_;
    from_y_01mm_ = y_01mm_;
    goal_x_01mm_ = goal.x_mm * 10;
    goal_y_01mm_ = goal.y_mm * 10;
    segment_01mm_ =
        distance_mm(x_01mm_, y_01mm_, goal_x_01mm_, goal_y_01mm_); // both in 0.1 mm
    travelled_01mm_ = 0;
    moving_ = true;
    log.add(tick, "robot", "motion_started",
            {{"to", target}, {"mmps", speed_mmps_}, {"raw_mmps", raw_speed_}});
    log.add(tick, "robot", "base_speed", {{"mmps", speed_mmps_}});
}

void HomecareController::start_state(int tick, SimulationLog& log) {
    const Fsm& fsm = fsms()[active_fsm_];
    const FsmState& st = fsm.states[active_state_];
    log.add(tick, "robot", "fsm_state", {{"fsm", fsm.name}, {"state", st.name}});
    if (st.transition[0] == '\0') { // final state of the chain
        if (returning_) {
            docked_ = true;
            log.add(tick, "robot", "docked", json::object());
            log.add(tick, "robot", "branch", {{"id", "c.docked"}});
            active_fsm_ = -1;
            active_state_ = -1;
            returning_ = false;
        } else {
            log.add(tick, "robot", "command_completed", {{"word", active_word_}});
            active_fsm_ = -1;
            active_state_ = -1;
            if (!queue_.empty()) {
                QueuedCommand next = queue_.front();
                queue_.pop_front();
                log.add(tick, "robot", "branch", {{"id", "c.next_command"}});
                start_command(next.word, next.speed_mmps, tick, log);
            } else {
                start_return(tick, log);
            }
        }
        return;
    }
    if (st.moves) {
        begin_motion(st.target, tick, log);
    } else {
        act_until_ = tick + st.duration;
    }
}

void HomecareController::complete_state(int tick, SimulationLog& log) {
    const Fsm& fsm = fsms()[active_fsm_];
    const FsmState& st = fsm.states[active_state_];
    if (st.event[0] != '\0') log.add(tick, "robot", st.event, json::object());
    log.add(tick, "robot", "branch", {{"id", st.transition}});
    ++active_state_;
    start_state(tick, log);
}

void HomecareController::start_return(int tick, SimulationLog& log) {
    returning_ = true;
    active_fsm_ = fsm_index("dock");
    active_state_ = 0;
    log.add(tick, "robot", "return_started", json::object());
    log.add(tick, "robot", "branch", {{"id", "c.return_started"}});
    start_state(tick, log);
}

void HomecareController::start_command(const std::string& word, int speed, int tick,
                                        SimulationLog& log) {
    docked_ = false;
    returning_ = false;
    active_word_ = word;
    raw_speed_ = speed;
    speed_mmps_ = speed;
    if (cfg_.faults.no_speed_cap) {
        if (speed > cfg_.base_speed_limit_mmps)
            log.add(tick, "robot", "branch", {{"id", "c.speed_uncapped"}});
    } else if (speed > cfg_.base_speed_limit_mmps - 10) {
        speed_mmps_ = cfg_.base_speed_limit_mmps - 10;
        log.add(tick, "robot", "branch", {{"id", "c.speed_clamped"}});
    }
    active_fsm_ = fsm_index(word);
    active_state_ = 0;
    log.add(tick, "robot", "command_started", {{"word", word}});
    start_state(tick, log);
}

void HomecareController::fall_over(int tick, SimulationLog& log) {
    fallen_ = true;
    moving_ = false;
    act_until_ = -1;
    active_fsm_ = -1;
    active_state_ = -1;
    returning_ = false;
    log.add(tick, "robot", "fall", {{"x_mm", x_mm()}, {"y_mm", y_mm()}});
    log.add(tick, "robot", "branch", {{"id", "c.fall"}});
    if (!queue_.empty()) {
        queue_.clear();
        log.add(tick, "robot", "queue_cleared", json::object());
    }
}

void HomecareController::advance_motion(int tick, SimulationLog& log) {
    if (!moving_ || fallen_) return;
    if (dog_mm_ < cfg_.proximity_stop_mm) {
        if (!halted_) {
            halted_ = true;
            log.add(tick, "robot", "halted", {{"dog_mm", dog_mm_}});
            log.add(tick, "robot", "branch", {{"id", "c.laser_halt"}});
        }
        return;
    }
    if (halted_) {
        halted_ = false;
        log.add(tick, "robot", "resumed", json::object());
        log.add(tick, "robot", "branch", {{"id", "c.laser_resume"}});
    }
    travelled_01mm_ += speed_mmps_; // mm/s over one 100 ms tick = 0.1 mm units
    if (travelled_01mm_ >= segment_01mm_) {
        x_01mm_ = goal_x_01mm_;
        y_01mm_ = goal_y_01mm_;
        moving_ = false;
        const FsmState& st = fsms()[active_fsm_].states[active_state_];
        log.add(tick, "robot", "arrived", {{"at", st.target}});
        complete_state(tick, log);
    } else {
        std::int64_t t = travelled_01mm_;
        x_01mm_ = from_x_01mm_ +
                  static_cast<int>((goal_x_01mm_ - from_x_01mm_) * t / segment_01mm_);
        y_01mm_ = from_y_01mm_ +
                  static_cast<int>((goal_y_01mm_ - from_y_01mm_) * t / segment_01mm_);
    }
}

void HomecareController::step(int tick, const std::vector<HomecareInput>& inputs,
                              SimulationLog& log) {
    if (tick == 0) {
        log.add(tick, "robot", "controller_started", json::object());
        log.add(tick, "robot", "branch", {{"id", "c.init"}});
        log.add(tick, "robot", "docked", json::object());
    }

    // Timed task states.
    if (!fallen_ && active_fsm_ >= 0 && act_until_ >= 0 && tick >= act_until_) {
        act_until_ = -1;
        complete_state(tick, log);
    }
    advance_motion(tick, log);

    for (const auto& in : inputs) {
        switch (in.kind) {
        case HomecareInput::Kind::dog_near:
            dog_mm_ = 150;
            log.add(tick, "dog", "dog_at", {{"mm", dog_mm_}});
            break;
        case HomecareInput::Kind::dog_leave:
            dog_mm_ = 2000;
            log.add(tick, "dog", "dog_at", {{"mm", dog_mm_}});
            break;
        case HomecareInput::Kind::dog_contact:
            dog_mm_ = 0;
            log.add(tick, "dog", "dog_at", {{"mm", 0}});
            // A detected approach halts the base first; an undetected charge
            // topples the robot anywhere away from the dock.
            if (active_fsm_ >= 0 && !halted_ && !fallen_) {
                if (cfg_.faults.dog_collision_fall) {
                    fall_over(tick, log);
                } else {
                    log.add(tick, "robot", "bump_absorbed", json::object());
                }
            } else {
                log.add(tick, "robot", "bump", json::object());
            }
            dog_mm_ = 250; // the startled dog backs off past the stop radius
            break;
        case HomecareInput::Kind::command: {
            bool valid = valid_command(in.word);
            log.add(tick, "human", "command_received",
                    {{"word", in.word}, {"valid", valid}, {"mmps", in.speed_mmps}});
            if (!valid) {
                log.add(tick, "robot", "invalid_ignored", {{"word", in.word}});
                log.add(tick, "robot", "branch", {{"id", "c.cmd_invalid"}});
                break;
            }
            if (fallen_) {
                log.add(tick, "robot", "command_dropped_fallen", {{"word", in.word}});
                log.add(tick, "robot", "branch", {{"id", "c.cmd_dropped_fallen"}});
                break;
            }
            if (accepted_tasks_ >= cfg_.max_tasks_per_test) {
                log.add(tick, "robot", "task_limit_dropped", {{"word", in.word}});
                log.add(tick, "robot", "branch", {{"id", "c.task_limit"}});
                break;
            }
            ++accepted_tasks_;
            if (active_fsm_ < 0 || returning_) {
                if (returning_) {
                    log.add(tick, "robot", "return_preempted", json::object());
                    log.add(tick, "robot", "branch", {{"id", "c.return_preempted"}});
                    moving_ = false;
                    returning_ = false;
                }
                start_command(in.word, in.speed_mmps, tick, log);
            } else {
                queue_.push_back(QueuedCommand{in.word, in.speed_mmps});
                log.add(tick, "robot", "command_queued", {{"word", in.word}});
            }
            break;
        }
        }
    }
}

bool HomecareController::resting() const {
    return !fallen_ && docked_ && queue_.empty() && active_fsm_ < 0;
}

} // namespace hribench::sim
