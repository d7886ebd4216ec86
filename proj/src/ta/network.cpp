#include "hribench/ta/network.hpp"

#include <algorithm>

namespace hribench::ta {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name,
              const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument(std::string("undeclared ") + what + " '" + name + "'");
}

} // namespace

int TaNetwork::automaton_index(const std::string& name) const {
    for (std::size_t i = 0; i < automata.size(); ++i)
        if (automata[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("undeclared automaton '" + name + "'");
}

int TaNetwork::clock_index(const std::string& name) const {
    for (std::size_t i = 0; i < clocks.size(); ++i)
        if (clocks[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("undeclared clock '" + name + "'");
}

int TaNetwork::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("undeclared variable '" + name + "'");
}

int TaNetwork::channel_index(const std::string& name) const {
    return find_name(channels, name, "channel");
}

int TaNetwork::location_index(int automaton, const std::string& name) const {
    return find_name(automata.at(automaton).locations, name, "location");
}

bool compare(int lhs, CmpOp op, int rhs) {
    switch (op) {
    case CmpOp::lt: return lhs < rhs;
    case CmpOp::le: return lhs <= rhs;
    case CmpOp::eq: return lhs == rhs;
    case CmpOp::ge: return lhs >= rhs;
    case CmpOp::gt: return lhs > rhs;
    case CmpOp::ne: return lhs != rhs;
    }
    return false;
}

std::size_t StateHash::operator()(const State& s) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](int v) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 0x100000001b3ull;
    };
    for (int v : s.locations) feed(v);
    for (int v : s.clocks) feed(v);
    for (int v : s.variables) feed(v);
    return h;
}

State initial_state(const TaNetwork& net) {
    State s;
    s.locations.reserve(net.automata.size());
    for (const auto& a : net.automata) s.locations.push_back(a.initial);
    s.clocks.assign(net.clocks.size(), 0);
    s.variables.reserve(net.variables.size());
    for (const auto& v : net.variables) s.variables.push_back(v.init);
    return s;
}

bool guard_satisfied(const TaNetwork&, const State& s, const std::vector<Comparison>& guard) {
    for (const auto& c : guard) {
        int lhs = c.kind == Comparison::Kind::clock ? s.clocks[c.index] : s.variables[c.index];
        int rhs = c.rhs_is_var ? s.variables[c.rhs_index] : c.rhs;
        if (!compare(lhs, c.op, rhs)) return false;
    }
    return true;
}

namespace {

bool invariants_hold(const TaNetwork& net, const State& s) {
    for (std::size_t i = 0; i < net.automata.size(); ++i) {
        const auto& inv = net.automata[i].invariants[s.locations[i]];
        if (!guard_satisfied(net, s, inv)) return false;
    }
    return true;
}

void apply_updates(const TaNetwork& net, State& s, const std::vector<Update>& updates) {
    for (const auto& u : updates) {
        switch (u.kind) {
        case Update::Kind::reset_clock: s.clocks[u.index] = 0; break;
        case Update::Kind::set_var: s.variables[u.index] = u.value; break;
        case Update::Kind::add_var: {
            const auto& decl = net.variables[u.index];
            s.variables[u.index] =
                std::clamp(s.variables[u.index] + u.value, decl.min, decl.max);
            break;
        }
        }
    }
}

} // namespace

std::vector<Step> enabled_steps(const TaNetwork& net, const State& s) {
    std::vector<Step> steps;

    // Internal edges, in (automaton, edge) order.
    for (std::size_t a = 0; a < net.automata.size(); ++a) {
        const auto& aut = net.automata[a];
        for (std::size_t e = 0; e < aut.edges.size(); ++e) {
            const Edge& edge = aut.edges[e];
            if (edge.source != s.locations[a] || edge.sync) continue;
            if (!guard_satisfied(net, s, edge.guard)) continue;
            Step step{Step::Kind::internal, static_cast<int>(a), static_cast<int>(e), -1, -1};
            if (invariants_hold(net, apply_step(net, s, step))) steps.push_back(step);
        }
    }

    // Send/receive pairs, sender-major order.
    for (std::size_t a = 0; a < net.automata.size(); ++a) {
        const auto& sender = net.automata[a];
        for (std::size_t e = 0; e < sender.edges.size(); ++e) {
            const Edge& send_edge = sender.edges[e];
            if (send_edge.source != s.locations[a] || !send_edge.sync || !send_edge.sync->send)
                continue;
            if (!guard_satisfied(net, s, send_edge.guard)) continue;
            for (std::size_t b = 0; b < net.automata.size(); ++b) {
                if (b == a) continue;
                const auto& receiver = net.automata[b];
                for (std::size_t f = 0; f < receiver.edges.size(); ++f) {
                    const Edge& recv_edge = receiver.edges[f];
                    if (recv_edge.source != s.locations[b] || !recv_edge.sync ||
                        recv_edge.sync->send ||
                        recv_edge.sync->channel != send_edge.sync->channel)
                        continue;
                    if (!guard_satisfied(net, s, recv_edge.guard)) continue;
                    Step step{Step::Kind::sync, static_cast<int>(a), static_cast<int>(e),
                              static_cast<int>(b), static_cast<int>(f)};
                    if (invariants_hold(net, apply_step(net, s, step))) steps.push_back(step);
                }
            }
        }
    }

    // The unit delay goes last so breadth-first searches prefer acting as
    // soon as a step is enabled. Clocks saturate at their bounds.
    {
        State delayed = s;
        for (std::size_t c = 0; c < delayed.clocks.size(); ++c)
            delayed.clocks[c] = std::min(delayed.clocks[c] + 1, net.clocks[c].bound);
        if (invariants_hold(net, delayed)) steps.push_back(Step{Step::Kind::delay, -1, -1, -1, -1});
    }
    return steps;
}

State apply_step(const TaNetwork& net, const State& s, const Step& step) {
    State next = s;
    switch (step.kind) {
    case Step::Kind::delay:
        for (std::size_t c = 0; c < next.clocks.size(); ++c)
            next.clocks[c] = std::min(next.clocks[c] + 1, net.clocks[c].bound);
        break;
    case Step::Kind::internal: {
        const Edge& e = net.automata[step.automaton].edges[step.edge];
        next.locations[step.automaton] = e.target;
        apply_updates(net, next, e.updates);
        break;
    }
    case Step::Kind::sync: {
        const Edge& send = net.automata[step.automaton].edges[step.edge];
        const Edge& recv = net.automata[step.partner_automaton].edges[step.partner_edge];
        next.locations[step.automaton] = send.target;
        next.locations[step.partner_automaton] = recv.target;
        apply_updates(net, next, send.updates); // sender updates first
        apply_updates(net, next, recv.updates);
        break;
    }
    }
    return next;
}

void validate_network(const TaNetwork& net) {
    if (net.automata.empty()) throw std::invalid_argument("network has no automata");
    for (const auto& c : net.clocks)
        if (c.bound < 0) throw std::invalid_argument("clock '" + c.name + "' has negative bound");
    for (const auto& v : net.variables)
        if (v.min > v.max || v.init < v.min || v.init > v.max)
            throw std::invalid_argument("variable '" + v.name + "' has an empty or bad domain");

    auto check_cmp = [&](const Comparison& c, const std::string& where) {
        if (c.kind == Comparison::Kind::clock) {
            if (c.index < 0 || c.index >= static_cast<int>(net.clocks.size()))
                throw std::invalid_argument("clock index out of range in " + where);
            if (c.rhs_is_var)
                throw std::invalid_argument("clocks compare against constants only in " + where);
            if (c.rhs > net.clocks[c.index].bound)
                throw std::invalid_argument("comparison against " + std::to_string(c.rhs) +
                                            " exceeds bound of clock '" +
                                            net.clocks[c.index].name + "' in " + where);
        } else if (c.index < 0 || c.index >= static_cast<int>(net.variables.size())) {
            throw std::invalid_argument("variable index out of range in " + where);
        } else if (c.rhs_is_var &&
                   (c.rhs_index < 0 || c.rhs_index >= static_cast<int>(net.variables.size()))) {
            throw std::invalid_argument("variable index out of range in " + where);
        }
    };

    for (const auto& aut : net.automata) {
        if (aut.locations.empty())
            throw std::invalid_argument("automaton '" + aut.name + "' has no locations");
        if (aut.invariants.size() != aut.locations.size())
            throw std::invalid_argument("automaton '" + aut.name +
                                        "' invariant table does not match locations");
        if (aut.initial < 0 || aut.initial >= static_cast<int>(aut.locations.size()))
            throw std::invalid_argument("automaton '" + aut.name + "' has bad initial location");
        for (std::size_t l = 0; l < aut.invariants.size(); ++l)
            for (const auto& c : aut.invariants[l]) {
                if (c.kind != Comparison::Kind::clock || (c.op != CmpOp::le && c.op != CmpOp::lt))
                    throw std::invalid_argument("invariants must be clock upper bounds in '" +
                                                aut.name + "'");
                check_cmp(c, "invariant of " + aut.name + "." + aut.locations[l]);
            }
        for (const auto& e : aut.edges) {
            const std::string where = "edge of " + aut.name;
            if (e.source < 0 || e.source >= static_cast<int>(aut.locations.size()) ||
                e.target < 0 || e.target >= static_cast<int>(aut.locations.size()))
                throw std::invalid_argument("edge endpoints out of range in " + where);
            for (const auto& c : e.guard) check_cmp(c, where);
            if (e.sync && (e.sync->channel < 0 ||
                           e.sync->channel >= static_cast<int>(net.channels.size())))
                throw std::invalid_argument("undeclared channel in " + where);
            for (const auto& u : e.updates) {
                if (u.kind == Update::Kind::reset_clock) {
                    if (u.index < 0 || u.index >= static_cast<int>(net.clocks.size()))
                        throw std::invalid_argument("clock reset out of range in " + where);
                } else {
                    if (u.index < 0 || u.index >= static_cast<int>(net.variables.size()))
                        throw std::invalid_argument("variable update out of range in " + where);
                    if (u.kind == Update::Kind::set_var &&
                        (u.value < net.variables[u.index].min ||
                         u.value > net.variables[u.index].max))
                        throw std::invalid_argument("assignment outside variable domain in " +
                                                    where);
                }
            }
        }
    }
}

} // namespace hribench::ta
