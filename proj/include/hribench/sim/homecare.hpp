#pragma once

#include "hribench/sim/config.hpp"
#include "hribench/sim/log.hpp"

#include <deque>
#include <optional>

namespace hribench::sim {

struct Waypoint {
    const char* name;
    int x_mm;
    int y_mm;
};

/// Room map: five named waypoints on a flat grid.
const std::vector<Waypoint>& homecare_waypoints();
const Waypoint& waypoint(const std::string& name);

/// Integer square root (floor); keeps all motion arithmetic exact.
int isqrt64(std::int64_t v);
int distance_mm(int ax, int ay, int bx, int by);

struct HomecareInput {
    enum class Kind { command, dog_near, dog_contact, dog_leave };
    Kind kind = Kind::command;
    std::string word;   // command
    int speed_mmps = 0; // command
};

/// The domestic assistant controller: four known commands executed as fixed
/// motion chains, return to the recharge dock after completing work, laser
/// stop on proximity, and the configurable fall-on-contact defect.
///
/// Each command (and the dock return) runs one linear state machine; the
/// five machines have 5, 6, 3, 3 and 2 states.
class HomecareController {
public:
    struct FsmState {
        const char* name;
        bool moves = false;      ///< motion to `target` vs timed task
        const char* target = ""; ///< waypoint for motion states
        int duration = 0;        ///< ticks for task states
        const char* event = "";  ///< emitted when the state completes
        const char* transition = ""; ///< branch id of the outgoing transition ("" = final)
    };
    struct Fsm {
        const char* name;
        std::vector<FsmState> states;
        int transition_count() const;
    };

    /// The five machines in declaration order: feed, clean, fridge, sink, dock return.
    static const std::vector<Fsm>& fsms();
    static bool valid_command(const std::string& word);

    HomecareController(const ScenarioConfig& cfg, std::uint64_t seed);

    void step(int tick, const std::vector<HomecareInput>& inputs, SimulationLog& log);

    bool resting() const; ///< docked, nothing queued, not fallen
    bool fallen() const { return fallen_; }
    int x_mm() const { return x_01mm_ / 10; }
    int y_mm() const { return y_01mm_ / 10; }

private:
    void start_command(const std::string& word, int speed, int tick, SimulationLog& log);
    void start_state(int tick, SimulationLog& log);
    void complete_state(int tick, SimulationLog& log);
    void start_return(int tick, SimulationLog& log);
    void begin_motion(const char* target, int tick, SimulationLog& log);
    void fall_over(int tick, SimulationLog& log);
    void advance_motion(int tick, SimulationLog& log);

    ScenarioConfig cfg_;

    // Pose in 0.1 mm so that per-tick advances stay integral.
    int x_01mm_;
    int y_01mm_;

    int dog_mm_ = 2000;
    bool halted_ = false;
    bool fallen_ = false;
    bool docked_ = true;

    struct QueuedCommand {
        std::string word;
        int speed_mmps;
    };
    std::deque<QueuedCommand> queue_;
    int accepted_tasks_ = 0;

    int active_fsm_ = -1; ///< index into fsms(); -1 when idle/docked
    int active_state_ = -1;
    bool returning_ = false;
    std::string active_word_;
    int speed_mmps_ = 0;  ///< effective speed of the current command
    int raw_speed_ = 0;

    // Motion bookkeeping.
    bool moving_ = false;
    int from_x_01mm_ = 0, from_y_01mm_ = 0;
    int goal_x_01mm_ = 0, goal_y_01mm_ = 0;
    int travelled_01mm_ = 0;
    int segment_01mm_ = 0;
    int act_until_ = -1;
};

} // namespace hribench::sim
