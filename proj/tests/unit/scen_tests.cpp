#include "doctest.h"

#include "hribench/bdi/interpreter.hpp"
#include "hribench/scen/scenario.hpp"
#include "hribench/verdicts/coverage.hpp"

#include <set>

using namespace hribench;

TEST_CASE("vocabularies: 38 manufacturing controls, 5 home-care controls") {
    CHECK(scen::handover().vocabulary.entries.size() == 38);
    CHECK(scen::homecare().vocabulary.entries.size() == 5);
    // Entries are distinct.
    for (const auto& def : {std::cref(scen::handover()), std::cref(scen::homecare())}) {
        std::set<std::string> names;
        for (const auto& b : def.get().vocabulary.entries) CHECK(names.insert(b.to_string()).second);
    }
}

TEST_CASE("release guard: exactly one of the eight reading bases satisfies it") {
    // The robot agent's first reading handler is the release guard.
    const bdi::SystemModel& model = scen::handover().bdi.model;
    const bdi::AgentProgram* robot = nullptr;
    for (const auto& a : model.agents)
        if (a.name == "robot") robot = &a;
    REQUIRE(robot);

    const bdi::Plan* release_plan = nullptr;
    for (const auto& p : robot->plans)
        if (p.trigger.name == "reading_done" && !p.context.empty()) release_plan = &p;
    REQUIRE(release_plan);

    int satisfied = 0;
    for (int code = 0; code < 8; ++code) {
        bdi::BeliefBase base;
        base.insert(bdi::Belief{(code & 4) ? "gaze_ok" : "gaze_nok", {1}, "sensors"});
        base.insert(bdi::Belief{(code & 2) ? "pressure_ok" : "pressure_nok", {1}, "sensors"});
        base.insert(bdi::Belief{(code & 1) ? "location_ok" : "location_nok", {1}, "sensors"});
        bdi::Event ev{false, bdi::Belief{"reading_done", {1}, "sensors"}, {}};
        auto sel = bdi::select_plan(*robot, base, ev, model.vocabulary);
        REQUIRE(sel.has_value());
        if (sel->plan == release_plan) ++satisfied;
    }
    CHECK(satisfied == 1);
}

TEST_CASE("one requested leg with an all-ok reading ends in the robot releasing it") {
    const auto& def = scen::handover();
    bdi::BeliefSet set;
    for (const char* name : {"gaze_ok", "pressure_ok", "location_ok", "request", "ready"})
        set.beliefs.push_back(bdi::Belief{name, {1}, "self"});
    bdi::ExecutionTrace trace = bdi::run_system(def.bdi.model, set, def.bdi.max_cycles);
    std::string last_robot_action;
    for (const auto& step : trace.steps)
        if (step.agent == "robot" && !step.actions.empty())
            last_robot_action = step.actions.back().to_string();
    CHECK(last_robot_action == "release_leg(1)");
}

TEST_CASE("four clean legs classify as the full-table subgroup") {
    const auto& def = scen::handover();
    bdi::BeliefSet set;
    for (int leg = 1; leg <= 4; ++leg)
        for (const char* name : {"gaze_ok", "pressure_ok", "location_ok"})
            set.beliefs.push_back(bdi::Belief{name, {leg}, "self"});
    for (int leg = 1; leg <= 4; ++leg) {
        set.beliefs.push_back(bdi::Belief{"request", {leg}, "self"});
        set.beliefs.push_back(bdi::Belief{"ready", {leg}, "self"});
    }
    gen::ConcreteTest test = gen::concretize(gen::bdi_generate(def.bdi, set), 5);
    sim::SimulationLog log =
        sim::simulate(sim::Scenario::handover, sim::ScenarioConfig::as_found(), test);
    auto rows = verdicts::classify_cross_product(log, sim::Scenario::handover);
    CHECK(rows.count(1) == 1);
}

TEST_CASE("handover campaign: 131 recipes, all distinct as traces") {
    auto sets = scen::handover_campaign_sets();
    CHECK(sets.size() == 131);
    const auto& def = scen::handover();
    std::vector<gen::AbstractTest> tests;
    for (const auto& s : sets) {
        gen::AbstractTest t = gen::bdi_generate(def.bdi, s);
        for (const auto& seen : tests) CHECK_FALSE(seen.same_actions(t));
        tests.push_back(std::move(t));
    }
}

TEST_CASE("home-care campaign: sampled sequences give at least 50 distinct traces") {
    auto sets = scen::homecare_campaign_sets(1);
    CHECK(sets.size() >= 50);
    const auto& def = scen::homecare();
    std::set<std::string> traces;
    for (const auto& s : sets) traces.insert(gen::serialize_test(gen::bdi_generate(def.bdi, s)));
    CHECK(traces.size() >= 50);
}

TEST_CASE("query suites parse against their networks") {
    for (const auto& def : {std::cref(scen::handover()), std::cref(scen::homecare())}) {
        for (const auto& text : def.get().queries) {
            ta::Query q = ta::parse_query(def.get().mc.network, text);
            CHECK(q.kind == ta::Query::Kind::exists_eventually);
        }
    }
    CHECK(scen::handover().queries.size() == 57);
    CHECK(scen::homecare().queries.size() == 23);
}

TEST_CASE("target_reached evaluates suite predicates over log counters") {
    const auto& def = scen::handover();
    sim::SimulationLog log;
    log.scenario = "handover";
    log.add(0, "human", "request");
    log.add(5, "robot", "branch", {{"id", "h.t01"}});
    log.add(50, "sensors", "published", {{"code", 6}});
    log.add(60, "robot", "decision", {{"release", false}, {"latency", 2}});
    CHECK(scen::target_reached(def, "E<> reqs == 1 && discarded >= 1", log));
    CHECK(scen::target_reached(def, "E<> got_reading >= 1 && gsel == 1 && psel == 1 && lsel == 0",
                               log));
    CHECK_FALSE(scen::target_reached(def, "E<> released == 1", log));
}

TEST_CASE("scenario models pass their own validators") {
    CHECK_NOTHROW(bdi::validate_model(scen::handover().bdi.model));
    CHECK_NOTHROW(bdi::validate_model(scen::homecare().bdi.model));
    CHECK_NOTHROW(ta::validate_network(scen::handover().mc.network));
    CHECK_NOTHROW(ta::validate_network(scen::homecare().mc.network));
    CHECK_NOTHROW(scen::handover().alphabet.validate());
    CHECK_NOTHROW(scen::homecare().alphabet.validate());
}
