#pragma once

#include "hribench/bdi/ast.hpp"

namespace hribench::bdi {

/// Attempts to unify a pattern with a ground belief under existing bindings.
/// Returns the extended bindings on success.
std::optional<Bindings> match_pattern(const Pattern& pattern, const Belief& belief,
                                      const Bindings& bindings);

/// Evaluates a plan context against a belief base: true iff an assignment of
/// the context variables exists such that every positive literal matches some
/// belief and no negated literal matches any. Candidate beliefs are tried in
/// base order and literals left to right with backtracking, so the witness
/// assignment is deterministic.
bool evaluate_context(const Context& context, const BeliefBase& base,
                      const std::set<std::string>& vocabulary, Bindings* out = nullptr);

/// Context evaluation without a vocabulary check (all names allowed).
bool evaluate_context(const Context& context, const BeliefBase& base);

/// An event is either a belief addition or a goal; goal events never touch
/// the belief base.
struct Event {
    bool is_goal = false;
    Belief belief;    // belief-addition payload
    std::string goal; // goal name
};

/// Returns the first plan in declaration order whose trigger unifies with the
/// event and whose context holds, along with the trigger bindings.
struct SelectedPlan {
    const Plan* plan = nullptr;
    Bindings bindings;
};
std::optional<SelectedPlan> select_plan(const AgentProgram& agent, const BeliefBase& base,
                                        const Event& event, const std::set<std::string>& vocabulary);

inline constexpr int kDefaultMaxCycles = 500;

/// Executes the system once. The verification agent delivers the injected
/// beliefs one per cycle in list order; every cycle each agent dequeues one
/// pending event (round-robin in declaration order), selects the first
/// applicable plan and runs its body atomically. Messages and self events
/// land in the next cycle. Terminates at quiescence or max_cycles; in the
/// latter case the trace is flagged truncated.
ExecutionTrace run_system(const SystemModel& model, const BeliefSet& injected,
                          int max_cycles = kDefaultMaxCycles);

} // namespace hribench::bdi
