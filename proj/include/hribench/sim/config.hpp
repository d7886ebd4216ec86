#pragma once

#include <stdexcept>
#include <string>

namespace hribench::sim {

/// Fault switches reproducing the defects observed in the code under test.
/// All on in the as-found profile; the fixed profile turns them off.
struct FaultSwitches {
    bool late_decision = true;    ///< release/discard decision may slip past the threshold
    bool gripper_near_hand = true;///< gripper closes without checking hand distance
    bool dog_collision_fall = true;///< dog contact while moving topples the robot for good
    bool no_speed_cap = true;     ///< base motion speed is not clamped to the limit
};

struct ScenarioConfig {
    // Timing (ticks; 1 tick = 100 ms of virtual time).
    int decision_threshold = 60;  ///< decide within this after a reading arrives
    int readiness_patience = 300; ///< wait for the readiness command this long
    int sensing_timeout = 150;    ///< wait for a reading this long
    int leg_settle = 540;         ///< fixed handover cadence: reset span per leg
    int handover_budget = 3000;   ///< 300 s
    int homecare_budget = 7000;   ///< 700 s
    int idle_limit = 600;         ///< staying put outside the dock longer than this is a defect
    int human_patience = 500;     ///< a pending request older than this bores the human

    // Limits.
    int joint_speed_limit_mradps = 250; ///< 0.25 rad/s
    int base_speed_limit_mmps = 250;    ///< 0.25 m/s
    int proximity_stop_mm = 200;        ///< halt when anything is closer than 20 cm
    int hand_near_mm = 150;             ///< hand closer than this counts as "too close"
    int max_tasks_per_test = 3;         ///< feasible commands accepted per run

    // Sensor classification bands (concrete magnitudes behind the ok / not-ok
    // classes). Chosen constants; the classes are what the protocol reads.
    int gaze_ok_max_deg = 30;      ///< ok: [0..30], not-ok: (30..90]
    int gaze_max_deg = 90;
    int pressure_ok_min = 40;      ///< ok: [40..100], not-ok: [0..39]
    int pressure_max = 100;
    int location_ok_max_mm = 250;  ///< ok: [50..250], not-ok: (250..800]
    int location_min_mm = 50;
    int location_max_mm = 800;

    // Fault behaviour knobs.
    int late_decision_percent = 30; ///< chance a decision dawdles, per reading
    int late_extra_min = 30;        ///< dawdle length beyond the threshold
    int late_extra_max = 60;

    FaultSwitches faults;

    static ScenarioConfig as_found() { return ScenarioConfig{}; }
    static ScenarioConfig fixed() {
        ScenarioConfig c;
        c.faults = FaultSwitches{false, false, false, false};
        return c;
    }
    static ScenarioConfig from_profile(const std::string& name) {
        if (name == "as-found") return as_found();
        if (name == "fixed") return fixed();
        throw std::invalid_argument("unknown profile '" + name + "' (use as-found or fixed)");
    }
    std::string profile_name() const {
        bool any = faults.late_decision || faults.gripper_near_hand ||
                   faults.dog_collision_fall || faults.no_speed_cap;
        return any ? "as-found" : "fixed";
    }
};

} // namespace hribench::sim
