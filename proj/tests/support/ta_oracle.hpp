#pragma once

// Test-only brute-force reachability oracle. Deliberately written as a naive
// re-implementation, independent of the checker's search: enumerate every
// candidate successor of a state, filter illegal ones, and walk the whole
// graph with an explicit queue keyed by packed states.

#include "hribench/ta/checker.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace ta_oracle {

using namespace hribench::ta;

inline std::vector<State> successors(const TaNetwork& net, const State& s) {
    std::vector<State> out;
    auto inv_ok = [&](const State& q) {
        for (std::size_t i = 0; i < net.automata.size(); ++i)
            if (!guard_satisfied(net, q, net.automata[i].invariants[q.locations[i]])) return false;
        return true;
    };

    State delayed = s;
    for (std::size_t c = 0; c < delayed.clocks.size(); ++c)
        if (delayed.clocks[c] < net.clocks[c].bound) ++delayed.clocks[c];
    if (inv_ok(delayed)) out.push_back(delayed);

    for (std::size_t a = 0; a < net.automata.size(); ++a)
        for (std::size_t e = 0; e < net.automata[a].edges.size(); ++e) {
            const Edge& edge = net.automata[a].edges[e];
            if (edge.sync) continue;
            if (edge.source != s.locations[a]) continue;
            if (!guard_satisfied(net, s, edge.guard)) continue;
            State n = apply_step(net, s,
                                 Step{Step::Kind::internal, static_cast<int>(a),
                                      static_cast<int>(e), -1, -1});
            if (inv_ok(n)) out.push_back(n);
        }

    for (std::size_t a = 0; a < net.automata.size(); ++a)
        for (std::size_t b = 0; b < net.automata.size(); ++b) {
            if (a == b) continue;
            for (std::size_t e = 0; e < net.automata[a].edges.size(); ++e)
                for (std::size_t f = 0; f < net.automata[b].edges.size(); ++f) {
                    const Edge& se = net.automata[a].edges[e];
                    const Edge& re = net.automata[b].edges[f];
                    if (!se.sync || !re.sync || !se.sync->send || re.sync->send) continue;
                    if (se.sync->channel != re.sync->channel) continue;
                    if (se.source != s.locations[a] || re.source != s.locations[b]) continue;
                    if (!guard_satisfied(net, s, se.guard) || !guard_satisfied(net, s, re.guard))
                        continue;
                    State n = apply_step(net, s,
                                         Step{Step::Kind::sync, static_cast<int>(a),
                                              static_cast<int>(e), static_cast<int>(b),
                                              static_cast<int>(f)});
                    if (inv_ok(n)) out.push_back(n);
                }
        }
    return out;
}

inline std::vector<int> pack(const State& s) {
    std::vector<int> v = s.locations;
    v.insert(v.end(), s.clocks.begin(), s.clocks.end());
    v.insert(v.end(), s.variables.begin(), s.variables.end());
    return v;
}

inline State unpack(const TaNetwork& net, const std::vector<int>& packed) {
    State s;
    std::size_t na = net.automata.size(), nc = net.clocks.size();
    s.locations.assign(packed.begin(), packed.begin() + na);
    s.clocks.assign(packed.begin() + na, packed.begin() + na + nc);
    s.variables.assign(packed.begin() + na + nc, packed.end());
    return s;
}

/// Packed reachable state -> breadth-first depth.
inline std::map<std::vector<int>, int> reachable(const TaNetwork& net,
                                                 std::size_t cap = 2'000'000) {
    std::map<std::vector<int>, int> distance;
    std::queue<State> frontier;
    frontier.push(initial_state(net));
    distance[pack(frontier.front())] = 0;
    while (!frontier.empty()) {
        State cur = frontier.front();
        frontier.pop();
        int d = distance.at(pack(cur));
        for (const State& n : successors(net, cur)) {
            auto key = pack(n);
            if (distance.count(key)) continue;
            if (distance.size() >= cap) throw std::runtime_error("oracle cap exceeded");
            distance[key] = d + 1;
            frontier.push(n);
        }
    }
    return distance;
}

} // namespace ta_oracle
