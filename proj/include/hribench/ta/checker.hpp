#pragma once

#include "hribench/ta/query.hpp"

namespace hribench::ta {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("state budget of " + std::to_string(budget) +
                             " exceeded before the search finished") {}
};

/// Proof object: a path through the discrete-time state graph. states[0] is
/// the initial state and every consecutive pair is related by the step
/// between them.
struct Witness {
    std::vector<State> states;
    std::vector<Step> steps;
};

struct CheckResult {
    enum class Verdict {
        satisfied,   ///< E<>: a goal state is reachable; witness is a shortest path
        unsatisfied, ///< E<>: exhaustive search found no goal state
        violated,    ///< A[]: a violating state is reachable; witness leads to it
        holds,       ///< A[]: predicate holds in every reachable state
    };
    Verdict verdict = Verdict::unsatisfied;
    std::optional<Witness> witness;
    std::size_t states_explored = 0;
};

inline constexpr std::size_t kDefaultStateBudget = 5'000'000;

/// Breadth-first exploration of the discrete-time state graph. Exhaustive
/// over the finite graph; throws BudgetExceeded rather than returning a
/// wrong answer when the budget is hit.
CheckResult check(const TaNetwork& net, const Query& query,
                  std::size_t state_budget = kDefaultStateBudget);

/// True iff the witness replays legally from the initial state under
/// enabled_steps. Used by tests and by consumers that refuse bad proofs.
bool witness_replays(const TaNetwork& net, const Witness& witness);

} // namespace hribench::ta
