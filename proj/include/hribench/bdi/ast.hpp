#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hribench::bdi {

/// Raised when a program references a belief name outside the declared
/// vocabulary of its system.
class VocabularyError : public std::runtime_error {
public:
    explicit VocabularyError(const std::string& what) : std::runtime_error(what) {}
};

/// Ground argument of a belief: an identifier or an integer.
using Atom = std::variant<int, std::string>;

std::string atom_to_string(const Atom& a);

/// A ground knowledge atom. Identity is (name, args); the source annotation
/// records which agent produced it and is excluded from comparisons.
struct Belief {
    std::string name;
    std::vector<Atom> args;
    std::string source = "self";

    bool operator==(const Belief& other) const { return name == other.name && args == other.args; }
    bool operator<(const Belief& other) const {
        if (name != other.name) return name < other.name;
        return args < other.args;
    }

    std::string to_string() const;
};

/// Belief base ordered by (name, args); iteration order is the tie-break for
/// pattern matching, so it must stay deterministic.
using BeliefBase = std::set<Belief>;

/// Pattern argument: a ground atom or a variable (single upper-case style
/// identifier). Variables bind during trigger/context matching.
struct Term {
    enum class Kind { ground, variable };
    Kind kind = Kind::ground;
    Atom value;      // when ground
    std::string var; // when variable

    static Term ground(Atom a) { return Term{Kind::ground, std::move(a), {}}; }
    static Term variable(std::string name) { return Term{Kind::variable, {}, std::move(name)}; }
    std::string to_string() const;
};

/// Belief pattern: name plus term list, possibly containing variables.
struct Pattern {
    std::string name;
    std::vector<Term> args;

    std::string to_string() const;
};

using Bindings = std::map<std::string, Atom>;

/// One conjunct of a plan context; a positive or negated belief pattern.
struct ContextLiteral {
    Pattern pattern;
    bool negated = false;
};

/// Conjunction of literals. Empty context is vacuously true.
using Context = std::vector<ContextLiteral>;

/// One plan body step.
struct Step {
    enum class Kind {
        emit_action,     ///< record an externally visible action
        send_belief,     ///< deliver a belief to another agent (next cycle)
        add_self_belief, ///< add a belief to the own base (event next cycle)
        create_goal,     ///< post a goal event to self (next cycle)
    };
    Kind kind;
    Pattern action;     // emit_action
    std::string target; // send_belief
    Pattern belief;     // send_belief / add_self_belief
    std::string goal;   // create_goal

    static Step emit(Pattern p) { return Step{Kind::emit_action, std::move(p), {}, {}, {}}; }
    static Step send(std::string to, Pattern b) {
        return Step{Kind::send_belief, {}, std::move(to), std::move(b), {}};
    }
    static Step self(Pattern b) { return Step{Kind::add_self_belief, {}, {}, std::move(b), {}}; }
    static Step achieve(std::string g) { return Step{Kind::create_goal, {}, {}, {}, std::move(g)}; }
};

/// Guarded plan. Triggers are belief-addition events (`+name(...)`) or goal
/// events (`!name`). Declaration order in the library is significant.
struct Plan {
    std::string id;
    bool goal_trigger = false; ///< true for `!goal` triggers
    Pattern trigger;
    Context context;
    std::vector<Step> body;
};

struct AgentProgram {
    std::string name;
    std::vector<Belief> initial_beliefs;
    std::vector<std::string> initial_goals;
    std::vector<Plan> plans;
};

/// Ordered list of control beliefs handed to the verification agent for one
/// run; a subset of the scenario's controllable vocabulary, delivered one per
/// cycle in list order.
struct BeliefSet {
    std::vector<Belief> beliefs;

    bool operator==(const BeliefSet& o) const { return beliefs == o.beliefs; }
};

/// A multi-agent system: agent programs plus the verification agent's name,
/// routing table for injected beliefs, and the declared belief vocabulary.
struct SystemModel {
    std::vector<AgentProgram> agents;
    std::string verifier;                            ///< agent that injects beliefs
    std::map<std::string, std::string> routes;       ///< injected belief name -> target agent
    std::set<std::string> vocabulary;                ///< all legal belief names
    std::set<std::string> controllable;              ///< names the verifier may inject
};

/// Validates plan/program invariants against the declared vocabulary.
/// Throws VocabularyError or std::invalid_argument on violation.
void validate_model(const SystemModel& model);

/// One recorded reasoning step: the cycle, acting agent, selected plan and
/// the actions its body emitted.
struct TraceStep {
    int cycle = 0;
    std::string agent;
    std::string plan_id;
    std::vector<Pattern> actions; ///< ground action labels
};

struct ExecutionTrace {
    std::vector<TraceStep> steps;
    bool truncated = false; ///< cycle budget hit before quiescence
};

} // namespace hribench::bdi
