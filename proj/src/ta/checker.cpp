#include "hribench/ta/checker.hpp"

#include <unordered_map>

namespace hribench::ta {

namespace {

struct SearchNode {
    int parent = -1;
    Step step; // step taken from parent to reach this node
};

Witness reconstruct(const std::vector<State>& states, const std::vector<SearchNode>& nodes,
                    int goal) {
    std::vector<int> chain;
    for (int at = goal; at != -1; at = nodes[at].parent) chain.push_back(at);
    Witness w;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) w.states.push_back(states[*it]);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        if (nodes[*it].parent != -1) w.steps.push_back(nodes[*it].step);
    return w;
}

} // namespace

CheckResult check(const TaNetwork& net, const Query& query, std::size_t state_budget) {
    validate_network(net);

    std::vector<State> states;
    std::vector<SearchNode> nodes;
    std::unordered_map<State, int, StateHash> seen;

    State init = initial_state(net);
    states.push_back(init);
    nodes.push_back(SearchNode{-1, {}});
    seen.emplace(init, 0);

    const bool looking_for_goal = query.kind == Query::Kind::exists_eventually;

    CheckResult result;
    for (std::size_t head = 0; head < states.size(); ++head) {
        const State current = states[head];
        result.states_explored = head + 1;

        bool hit = eval_predicate(net, current, *query.predicate);
        if (looking_for_goal ? hit : !hit) {
            result.verdict = looking_for_goal ? CheckResult::Verdict::satisfied
                                              : CheckResult::Verdict::violated;
            result.witness = reconstruct(states, nodes, static_cast<int>(head));
            return result;
        }

        for (const Step& step : enabled_steps(net, current)) {
            State next = apply_step(net, current, step);
            if (seen.count(next)) continue;
            if (states.size() >= state_budget) throw BudgetExceeded(state_budget);
            seen.emplace(next, static_cast<int>(states.size()));
            states.push_back(std::move(next));
            nodes.push_back(SearchNode{static_cast<int>(head), step});
        }
    }

    result.states_explored = states.size();
    result.verdict = looking_for_goal ? CheckResult::Verdict::unsatisfied
                                      : CheckResult::Verdict::holds;
    return result;
}

bool witness_replays(const TaNetwork& net, const Witness& witness) {
    if (witness.states.empty()) return false;
    if (!(witness.states.front() == initial_state(net))) return false;
    if (witness.steps.size() + 1 != witness.states.size()) return false;
    for (std::size_t i = 0; i < witness.steps.size(); ++i) {
        const auto legal = enabled_steps(net, witness.states[i]);
        bool found = false;
        for (const auto& s : legal) {
            if (s.kind == witness.steps[i].kind && s.automaton == witness.steps[i].automaton &&
                s.edge == witness.steps[i].edge &&
                s.partner_automaton == witness.steps[i].partner_automaton &&
                s.partner_edge == witness.steps[i].partner_edge) {
                found = true;
                break;
            }
        }
        if (!found) return false;
        if (!(apply_step(net, witness.states[i], witness.steps[i]) == witness.states[i + 1]))
            return false;
    }
    return true;
}

} // namespace hribench::ta
