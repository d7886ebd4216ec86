#include "hribench/bdi/interpreter.hpp"

#include <deque>
#include <functional>

namespace hribench::bdi {

std::optional<Bindings> match_pattern(const Pattern& pattern, const Belief& belief,
                                      const Bindings& bindings) {
    if (pattern.name != belief.name || pattern.args.size() != belief.args.size())
        return std::nullopt;
    Bindings result = bindings;
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        const Term& t = pattern.args[i];
        if (t.kind == Term::Kind::ground) {
            if (t.value != belief.args[i]) return std::nullopt;
        } else {
            auto it = result.find(t.var);
            if (it == result.end()) {
                result.emplace(t.var, belief.args[i]);
            } else if (it->second != belief.args[i]) {
                return std::nullopt;
            }
        }
    }
    return result;
}

namespace {

bool matches_any(const Pattern& pattern, const BeliefBase& base, const Bindings& bindings) {
    for (const auto& b : base)
        if (match_pattern(pattern, b, bindings)) return true;
    return false;
}

bool solve(const Context& context, std::size_t index, const BeliefBase& base, Bindings& bindings,
           Bindings* out) {
    if (index == context.size()) {
        if (out) *out = bindings;
        return true;
    }
    const ContextLiteral& lit = context[index];
    if (lit.negated) {
        // Negation as failure under the bindings accumulated so far.
        if (matches_any(lit.pattern, base, bindings)) return false;
        return solve(context, index + 1, base, bindings, out);
    }
    for (const auto& b : base) {
        if (auto extended = match_pattern(lit.pattern, b, bindings)) {
            if (solve(context, index + 1, base, *extended, out)) {
                bindings = *extended;
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool evaluate_context(const Context& context, const BeliefBase& base,
                      const std::set<std::string>& vocabulary, Bindings* out) {
    for (const auto& lit : context)
        if (!vocabulary.count(lit.pattern.name))
            throw VocabularyError("undeclared belief name '" + lit.pattern.name + "' in context");
    Bindings bindings;
    return solve(context, 0, base, bindings, out);
}

bool evaluate_context(const Context& context, const BeliefBase& base) {
    Bindings bindings;
    return solve(context, 0, base, bindings, nullptr);
}

namespace {

bool context_holds(const Context& context, const BeliefBase& base, Bindings& bindings) {
    return solve(context, 0, base, bindings, &bindings);
}

} // namespace

std::optional<SelectedPlan> select_plan(const AgentProgram& agent, const BeliefBase& base,
                                        const Event& event,
                                        const std::set<std::string>& vocabulary) {
    for (const auto& plan : agent.plans) {
        for (const auto& lit : plan.context)
            if (!vocabulary.count(lit.pattern.name))
                throw VocabularyError("undeclared belief name '" + lit.pattern.name + "' in plan " +
                                      plan.id);
        Bindings bindings;
        if (event.is_goal) {
            if (!plan.goal_trigger || plan.trigger.name != event.goal) continue;
        } else {
            if (plan.goal_trigger) continue;
            auto m = match_pattern(plan.trigger, event.belief, {});
            if (!m) continue;
            bindings = *m;
        }
        if (context_holds(plan.context, base, bindings)) return SelectedPlan{&plan, bindings};
    }
    return std::nullopt;
}

namespace {

Atom instantiate_term(const Term& t, const Bindings& bindings) {
    if (t.kind == Term::Kind::ground) return t.value;
    auto it = bindings.find(t.var);
    if (it == bindings.end())
        throw std::invalid_argument("unbound variable '" + t.var + "' in plan body");
    return it->second;
}

Pattern instantiate_pattern(const Pattern& p, const Bindings& bindings) {
    Pattern out;
    out.name = p.name;
    out.args.reserve(p.args.size());
    for (const auto& t : p.args) out.args.push_back(Term::ground(instantiate_term(t, bindings)));
    return out;
}

Belief pattern_to_belief(const Pattern& p, const std::string& source) {
    Belief b;
    b.name = p.name;
    b.source = source;
    b.args.reserve(p.args.size());
    for (const auto& t : p.args) b.args.push_back(t.value);
    return b;
}

struct AgentState {
    const AgentProgram* program = nullptr;
    BeliefBase base;
    std::deque<Event> inbox;
};

} // namespace

ExecutionTrace run_system(const SystemModel& model, const BeliefSet& injected, int max_cycles) {
    validate_model(model);
    if (max_cycles < 1) throw std::invalid_argument("max_cycles must be >= 1");
    for (const auto& b : injected.beliefs) {
        if (!model.controllable.count(b.name))
            throw VocabularyError("injected belief '" + b.name + "' is not controllable");
        if (!model.routes.count(b.name))
            throw std::invalid_argument("no route for injected belief '" + b.name + "'");
    }

    std::vector<AgentState> states(model.agents.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < model.agents.size(); ++i) {
        states[i].program = &model.agents[i];
        for (const auto& b : model.agents[i].initial_beliefs) states[i].base.insert(b);
        for (const auto& g : model.agents[i].initial_goals)
            states[i].inbox.push_back(Event{true, {}, g});
        index.emplace(model.agents[i].name, i);
    }

    ExecutionTrace trace;
    std::size_t injected_next = 0;

    for (int cycle = 0; cycle < max_cycles; ++cycle) {
        bool any_pending = injected_next < injected.beliefs.size();
        for (const auto& s : states) any_pending = any_pending || !s.inbox.empty();
        if (!any_pending) return trace;

        // Deliveries produced this cycle become visible next cycle.
        std::vector<std::vector<Event>> outbox(states.size());

        if (injected_next < injected.beliefs.size()) {
            Belief b = injected.beliefs[injected_next++];
            b.source = model.verifier;
            outbox[index.at(model.routes.at(b.name))].push_back(Event{false, std::move(b), {}});
        }

        for (std::size_t i = 0; i < states.size(); ++i) {
            AgentState& st = states[i];
            if (st.inbox.empty()) continue;
            Event ev = st.inbox.front();
            st.inbox.pop_front();
            if (!ev.is_goal) st.base.insert(ev.belief);

            auto selected = select_plan(*st.program, st.base, ev, model.vocabulary);
            if (!selected) continue; // no applicable plan: event is dropped

            TraceStep step;
            step.cycle = cycle;
            step.agent = st.program->name;
            step.plan_id = selected->plan->id;
            for (const auto& body_step : selected->plan->body) {
                switch (body_step.kind) {
                case Step::Kind::emit_action:
                    step.actions.push_back(instantiate_pattern(body_step.action, selected->bindings));
                    break;
                case Step::Kind::send_belief: {
                    Pattern ground = instantiate_pattern(body_step.belief, selected->bindings);
                    outbox[index.at(body_step.target)].push_back(
                        Event{false, pattern_to_belief(ground, st.program->name), {}});
                    break;
                }
                case Step::Kind::add_self_belief: {
                    Pattern ground = instantiate_pattern(body_step.belief, selected->bindings);
                    Belief b = pattern_to_belief(ground, st.program->name);
                    st.base.insert(b);
                    outbox[i].push_back(Event{false, std::move(b), {}});
                    break;
                }
                case Step::Kind::create_goal:
                    outbox[i].push_back(Event{true, {}, body_step.goal});
                    break;
                }
            }
            trace.steps.push_back(std::move(step));
        }

        for (std::size_t i = 0; i < states.size(); ++i)
            for (auto& ev : outbox[i]) states[i].inbox.push_back(std::move(ev));
    }

    trace.truncated = true;
    return trace;
}

} // namespace hribench::bdi
