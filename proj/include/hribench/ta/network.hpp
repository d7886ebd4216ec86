#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hribench::ta {

struct ClockDecl {
    std::string name;
    int bound = 0; ///< clocks saturate at this value; must cover every constant compared against
};

struct VarDecl {
    std::string name;
    int min = 0;
    int max = 0;
    int init = 0;
};

enum class CmpOp { lt, le, eq, ge, gt, ne };

/// Atomic guard/invariant/predicate comparison. The left side is a clock or
/// variable; the right side is a constant or, for variables, another
/// variable.
struct Comparison {
    enum class Kind { clock, var };
    Kind kind = Kind::var;
    int index = 0;
    CmpOp op = CmpOp::eq;
    int rhs = 0;
    bool rhs_is_var = false;
    int rhs_index = 0;
};

bool compare(int lhs, CmpOp op, int rhs);

struct Sync {
    int channel = 0;
    bool send = false; ///< '!' side; false is the '?' side
};

struct Update {
    enum class Kind { reset_clock, set_var, add_var };
    Kind kind = Kind::set_var;
    int index = 0;
    int value = 0; ///< add_var saturates at the variable's declared domain
};

struct Edge {
    int source = 0;
    int target = 0;
    std::vector<Comparison> guard;
    std::optional<Sync> sync;
    std::vector<Update> updates;
    std::string label; ///< optional action tag used by witness projection
};

struct Automaton {
    std::string name;
    std::vector<std::string> locations;
    int initial = 0;
    std::vector<std::vector<Comparison>> invariants; ///< per location; clock upper bounds only
    std::vector<Edge> edges;
};

struct TaNetwork {
    std::vector<Automaton> automata;
    std::vector<ClockDecl> clocks;
    std::vector<VarDecl> variables;
    std::vector<std::string> channels;

    int automaton_index(const std::string& name) const;
    int clock_index(const std::string& name) const;
    int variable_index(const std::string& name) const;
    int channel_index(const std::string& name) const;
    int location_index(int automaton, const std::string& name) const;
};

/// Global configuration of the network under discrete-time semantics.
struct State {
    std::vector<int> locations;
    std::vector<int> clocks;
    std::vector<int> variables;

    bool operator==(const State& o) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const;
};

/// One move in the discrete-time semantics: a unit delay, a lone internal
/// edge, or a paired send/receive over a channel.
struct Step {
    enum class Kind { delay, internal, sync };
    Kind kind = Kind::delay;
    int automaton = -1;
    int edge = -1;
    int partner_automaton = -1; ///< receiver side of a sync
    int partner_edge = -1;
};

State initial_state(const TaNetwork& net);

bool guard_satisfied(const TaNetwork& net, const State& s, const std::vector<Comparison>& guard);

/// All legal successor steps from a state: the unit delay (clocks saturate at
/// their bounds, blocked if it would break an invariant), every enabled
/// internal edge, and every matched send/receive pair. Send and receive
/// halves of a channel never fire alone.
std::vector<Step> enabled_steps(const TaNetwork& net, const State& s);

State apply_step(const TaNetwork& net, const State& s, const Step& step);

/// Structural checks plus the saturation lint: every clock comparison in a
/// guard, invariant or update must use a constant within the clock's bound,
/// otherwise saturation could change the meaning of the model.
void validate_network(const TaNetwork& net);

} // namespace hribench::ta
