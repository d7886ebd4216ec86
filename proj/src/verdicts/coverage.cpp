#include "hribench/verdicts/coverage.hpp"

namespace hribench::verdicts {

CodeCoverage code_coverage(const sim::SimulationLog& log, sim::Scenario scenario) {
    const auto& points = sim::branch_points(scenario);
    std::set<std::string> known(points.begin(), points.end());
    CodeCoverage cov;
    cov.total = static_cast<int>(points.size());
    for (const auto& e : log.events) {
        if (e.label != "branch") continue;
        const std::string id = e.payload.value("id", "");
        if (known.count(id)) cov.covered.insert(id);
    }
    cov.percent = cov.total == 0 ? 0.0 : 100.0 * static_cast<double>(cov.covered.size()) /
                                              static_cast<double>(cov.total);
    return cov;
}

int subgroup_count(sim::Scenario scenario) {
    return scenario == sim::Scenario::handover ? 14 : 6;
}

namespace {

std::set<int> classify_handover(const sim::SimulationLog& log) {
    HandoverDigest d = digest_handover(log);
    std::set<int> rows;

    bool any_ready_reading = false, any_off_reading = false, any_timeout = false;
    bool any_release = false, any_decision_discard = false;
    bool all_timed_out = !d.cycles.empty();
    for (const auto& c : d.cycles) {
        if (c.sensed && c.first_code == 7) any_ready_reading = true;
        if (c.sensed && c.first_code != 7) any_off_reading = true;
        if (c.timed_out) any_timeout = true;
        if (c.released) any_release = true;
        if (c.decision_tick >= 0 && !c.decision_release) any_decision_discard = true;
        if (!c.timed_out) all_timed_out = false;
    }

    const int issued = d.requests_issued;
    if (issued >= 2 && issued <= 4) {
        int base = issued == 4 ? 1 : issued == 3 ? 4 : 7;
        if (any_ready_reading) rows.insert(base);
        if (any_off_reading) rows.insert(base + 1);
        if (d.bored_seen && any_timeout) rows.insert(base + 2);
    } else if (issued == 1) {
        if (any_ready_reading) rows.insert(10);
        if (any_off_reading) rows.insert(11);
        if (any_timeout) rows.insert(12);
    }
    if (issued >= 1 && issued <= 4 && !d.cycles.empty() && all_timed_out) rows.insert(13);
    if (issued == 0 ||
        (d.bored_seen && !any_release && !any_decision_discard))
        rows.insert(14);
    if (rows.empty()) rows.insert(14); // total classification: fallback row
    return rows;
}

std::set<int> classify_homecare(const sim::SimulationLog& log) {
    HomecareDigest d = digest_homecare(log);
    std::set<int> rows;
    auto issued = [&](const char* w) {
        auto it = d.issued.find(w);
        return it == d.issued.end() ? 0 : it->second;
    };
    auto done = [&](const char* w) {
        auto it = d.completed.find(w);
        return it == d.completed.end() ? 0 : it->second;
    };
    if (issued("feed") >= 1 && done("feed") >= 1) rows.insert(1);
    if (issued("clean") >= 1 && done("clean") >= 1) rows.insert(2);
    if (issued("fridge") >= 1 && done("fridge") >= 1) rows.insert(3);
    if (issued("sink") >= 1 && done("sink") >= 1) rows.insert(4);
    if (issued("feed") + issued("clean") >= 2 && done("feed") + done("clean") >= 2)
        rows.insert(5);
    if (d.issued_invalid >= 1) rows.insert(6);
    if (rows.empty()) rows.insert(6); // fallback row
    return rows;
}

} // namespace

std::set<int> classify_cross_product(const sim::SimulationLog& log, sim::Scenario scenario) {
    return scenario == sim::Scenario::handover ? classify_handover(log) : classify_homecare(log);
}

} // namespace hribench::verdicts
