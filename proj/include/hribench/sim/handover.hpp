#pragma once

#include "hribench/sim/config.hpp"
#include "hribench/sim/log.hpp"
#include "hribench/util/rng.hpp"

#include <optional>

namespace hribench::sim {

/// One classified sensor reading with the concrete magnitudes behind the
/// classes. Classification is a pure function of the magnitudes against the
/// configured bands.
struct SensorTriple {
    bool gaze_ok = false;
    bool pressure_ok = false;
    bool location_ok = false;
    int gaze_deg = 0;
    int pressure = 0;
    int location_mm = 0;

    bool all_ok() const { return gaze_ok && pressure_ok && location_ok; }
    int code() const { return (gaze_ok ? 4 : 0) + (pressure_ok ? 2 : 0) + (location_ok ? 1 : 0); }

    static SensorTriple classify(const ScenarioConfig& cfg, int gaze_deg, int pressure,
                                 int location_mm);
};

/// Input events the controller consumes, in arrival order within a tick.
struct HandoverInput {
    enum class Kind { request, ready, bored, reading };
    Kind kind = Kind::request;
    SensorTriple triple; // reading
};

/// The handover protocol state machine: activation, pick, hold out, signal,
/// readiness command, sensor reading, release-or-discard decision within a
/// time threshold. Emits its activity into the simulation log, including one
/// branch record per decision point for coverage collection.
class HandoverController {
public:
    enum class State {
        idle,
        picking,
        holding_out,
        signaling,
        await_ready,
        sensing,
        deciding,
        releasing,
        discarding,
        timed_out,
        aborting,
        leg_done,
        finished,
        disengaged,
    };

    struct Transition {
        const char* id;
        State from;
        State to;
        const char* on;
    };

    static const std::vector<std::string>& state_names(); ///< 14 entries
    static const std::vector<Transition>& transitions();  ///< 22 entries
    static std::string state_name(State s);

    HandoverController(const ScenarioConfig& cfg, std::uint64_t seed);

    /// Advances one tick: due timers first, then the tick's inputs in order.
    void step(int tick, const std::vector<HandoverInput>& inputs, SimulationLog& log);

    /// True when nothing is pending: terminal state, or idle with no queued
    /// activation and no armed timer.
    bool resting() const;

    State state() const { return state_; }
    int legs_released() const { return legs_released_; }
    int legs_discarded() const { return legs_discarded_; }

private:
    void take(const char* transition_id, int tick, SimulationLog& log);
    void enter(State s, int tick, SimulationLog& log);
    void begin_cycle(int tick, SimulationLog& log);
    void finish_decision(int tick, SimulationLog& log);
    void start_discard_close(int tick, SimulationLog& log);
    void handle_timers(int tick, SimulationLog& log);
    void handle_input(const HandoverInput& in, int tick, SimulationLog& log);

    ScenarioConfig cfg_;
    util::Rng rng_;
    State state_ = State::idle;

    int pending_requests_ = 0;
    int legs_released_ = 0;
    int legs_discarded_ = 0;
    int leg_start_tick_ = 0;

    int phase_until_ = -1;   ///< generic state timer deadline
    int decide_at_ = -1;     ///< decision due tick while deciding
    int reading_tick_ = -1;  ///< first reading of the current cycle
    bool decision_late_ = false;
    std::optional<SensorTriple> pending_triple_; ///< latest reading, decision basis
    bool sensed_this_cycle_ = false;

    int hand_mm_ = 600;        ///< last perceived hand distance; far by default
    int hand_withdraw_at_ = -1;
    bool awaiting_close_ = false; ///< discard entry deferred until the hand clears
    int discard_done_at_ = -1;
};

} // namespace hribench::sim
