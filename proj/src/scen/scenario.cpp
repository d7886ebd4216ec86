#include "hribench/scen/scenario.hpp"

namespace hribench::scen {

const ScenarioDef& get(sim::Scenario s) {
    return s == sim::Scenario::handover ? handover() : homecare();
}

std::vector<bdi::BeliefSet> bdi_campaign_sets(sim::Scenario s, std::uint64_t seed) {
    return s == sim::Scenario::handover ? handover_campaign_sets() : homecare_campaign_sets(seed);
}

namespace {

std::map<std::string, int> handover_stats(const sim::SimulationLog& log) {
    std::map<std::string, int> s = {
        {"reqs", 0},       {"started", 0},  {"released", 0}, {"discarded", 0},
        {"timedout", 0},   {"tmo_cmd", 0},  {"tmo_sense", 0}, {"aborted", 0},
        {"bored_cnt", 0},  {"got_reading", 0}, {"gsel", 0},   {"psel", 0},
        {"lsel", 0},       {"quit", 0},
    };
    for (const auto& e : log.events) {
        if (e.source == "human") {
            if (e.label == "request") ++s["reqs"];
            else if (e.label == "bored") ++s["bored_cnt"];
        } else if (e.source == "sensors" && e.label == "published") {
            s["got_reading"] += 1;
            int code = e.payload.value("code", 0);
            s["gsel"] = (code >> 2) & 1;
            s["psel"] = (code >> 1) & 1;
            s["lsel"] = code & 1;
        } else if (e.source == "robot") {
            if (e.label == "branch" && e.payload.value("id", "") == "h.t01") ++s["started"];
            else if (e.label == "leg_released") s["released"] = e.payload.value("count", 0);
            else if (e.label == "decision" && !e.payload.value("release", false))
                ++s["discarded"];
            else if (e.label == "timeout") {
                ++s["timedout"];
                if (e.payload.value("phase", "") == "cmd") ++s["tmo_cmd"];
                else ++s["tmo_sense"];
            } else if (e.label == "abort") {
                ++s["aborted"];
            } else if (e.label == "state" && e.payload.value("to", "") == "disengaged") {
                s["quit"] = 1;
            }
        }
    }
    return s;
}

std::map<std::string, int> homecare_stats(const sim::SimulationLog& log) {
    std::map<std::string, int> s = {
        {"issued_feed", 0}, {"issued_clean", 0}, {"issued_fridge", 0}, {"issued_sink", 0},
        {"issued_invalid", 0}, {"done_feed", 0}, {"done_clean", 0},   {"done_fridge", 0},
        {"done_sink", 0},   {"fc_done", 0},      {"valid_cnt", 0},    {"fallen", 0},
        {"near", 0},        {"visited", 0},      {"moved", 0},
    };
    for (const auto& e : log.events) {
        if (e.source == "human" && e.label == "command_received") {
            if (e.payload.value("valid", false)) {
                ++s["issued_" + e.payload.value("word", "")];
                ++s["valid_cnt"];
            } else {
                ++s["issued_invalid"];
            }
        } else if (e.source == "robot") {
            if (e.label == "command_completed") {
                const std::string word = e.payload.value("word", "");
                ++s["done_" + word];
                if (word == "feed" || word == "clean") ++s["fc_done"];
            } else if (e.label == "fall") {
                s["fallen"] = 1;
            } else if (e.label == "motion_started") {
                s["moved"] = 1;
            }
        } else if (e.source == "dog" && e.label == "dog_at") {
            bool close = e.payload.value("mm", 9999) <= 200;
            s["near"] = close ? 1 : 0; // tracks the latest report
            if (close) s["visited"] = 1;
        }
    }
    return s;
}

bool eval_on_stats(const ScenarioDef& def, const ta::Predicate& p,
                   const std::map<std::string, int>& stats) {
    using K = ta::Predicate::Kind;
    switch (p.kind) {
    case K::location:
        throw std::invalid_argument("suite queries must not test raw locations");
    case K::comparison: {
        if (p.cmp.kind != ta::Comparison::Kind::var)
            throw std::invalid_argument("suite queries must compare variables only");
        const std::string& name = def.mc.network.variables[p.cmp.index].name;
        int rhs = p.cmp.rhs_is_var
                      ? stats.at(def.mc.network.variables[p.cmp.rhs_index].name)
                      : p.cmp.rhs;
        return ta::compare(stats.at(name), p.cmp.op, rhs);
    }
    case K::conjunction:
        return eval_on_stats(def, *p.lhs, stats) && eval_on_stats(def, *p.rhs, stats);
    case K::disjunction:
        return eval_on_stats(def, *p.lhs, stats) || eval_on_stats(def, *p.rhs, stats);
    case K::negation: return !eval_on_stats(def, *p.lhs, stats);
    }
    return false;
}

} // namespace

std::map<std::string, int> log_stats(sim::Scenario scenario, const sim::SimulationLog& log) {
    return scenario == sim::Scenario::handover ? handover_stats(log) : homecare_stats(log);
}

bool target_reached(const ScenarioDef& def, const std::string& query_text,
                    const sim::SimulationLog& log) {
    ta::Query q = ta::parse_query(def.mc.network, query_text);
    auto stats = log_stats(def.scenario, log);
    return eval_on_stats(def, *q.predicate, stats);
}

} // namespace hribench::scen
