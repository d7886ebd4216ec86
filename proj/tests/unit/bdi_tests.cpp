#include "doctest.h"

#include "hribench/bdi/interpreter.hpp"
#include "hribench/bdi/parser.hpp"

using namespace hribench::bdi;

namespace {

Belief b(const std::string& name, std::vector<Atom> args = {}) {
    return Belief{name, std::move(args), "self"};
}

Pattern pat(const std::string& name, std::vector<Term> args = {}) {
    return Pattern{name, std::move(args)};
}

Term g(int v) { return Term::ground(Atom{v}); }
Term g(const char* v) { return Term::ground(Atom{std::string(v)}); }
Term v(const char* name) { return Term::variable(name); }

ContextLiteral pos(Pattern p) { return ContextLiteral{std::move(p), false}; }
ContextLiteral neg(Pattern p) { return ContextLiteral{std::move(p), true}; }

} // namespace

TEST_CASE("context: positive and negated literals") {
    Context ctx{pos(pat("ready")), neg(pat("bored"))};
    CHECK(evaluate_context(ctx, {b("ready")}));
    CHECK_FALSE(evaluate_context(ctx, {b("ready"), b("bored")}));
    CHECK_FALSE(evaluate_context(ctx, {}));
}

TEST_CASE("context: undeclared name raises a vocabulary error") {
    Context ctx{pos(pat("redy"))};
    CHECK_THROWS_AS(evaluate_context(ctx, {b("ready")}, {"ready", "bored"}), VocabularyError);
}

TEST_CASE("context: release guard matches exactly one of the eight reading variants") {
    // Guard requiring the all-ok reading, brute forced over every variant.
    Context guard{pos(pat("gpl", {g(1), g(1), g(1)}))};
    int satisfied = 0;
    for (int gz = 0; gz <= 1; ++gz)
        for (int pr = 0; pr <= 1; ++pr)
            for (int lo = 0; lo <= 1; ++lo)
                if (evaluate_context(guard, {b("gpl", {gz, pr, lo})})) ++satisfied;
    CHECK(satisfied == 1);
}

TEST_CASE("context: backtracking explores alternative bindings") {
    // First candidate for the first literal fails the second; a later one works.
    Context ctx{pos(pat("g", {v("K"), v("V")})), pos(pat("wanted", {v("V")}))};
    BeliefBase base{b("g", {1, 0}), b("g", {1, 1}), b("wanted", {1})};
    Bindings out;
    CHECK(evaluate_context(ctx, base, {"g", "wanted"}, &out));
    CHECK(out.at("V") == Atom{1});
}

namespace {

AgentProgram two_plan_agent() {
    AgentProgram a;
    a.name = "probe";
    Plan first;
    first.id = "first";
    first.trigger = pat("go", {v("K")});
    first.body = {Step::emit(pat("alpha", {v("K")}))};
    Plan second;
    second.id = "second";
    second.trigger = pat("go", {v("K")});
    second.body = {Step::emit(pat("beta", {v("K")}))};
    a.plans = {first, second};
    return a;
}

} // namespace

TEST_CASE("select_plan: declaration order breaks ties") {
    AgentProgram a = two_plan_agent();
    Event ev{false, b("go", {3}), {}};
    auto sel = select_plan(a, {}, ev, {"go"});
    REQUIRE(sel.has_value());
    CHECK(sel->plan->id == "first");
    CHECK(sel->bindings.at("K") == Atom{3});
}

TEST_CASE("select_plan: no trigger match and false context are normal misses") {
    AgentProgram a = two_plan_agent();
    a.plans[0].context = {pos(pat("armed"))};
    a.plans[1].context = {pos(pat("armed"))};
    CHECK_FALSE(select_plan(a, {}, Event{false, b("stop"), {}}, {"go", "stop", "armed"}));
    CHECK_FALSE(select_plan(a, {}, Event{false, b("go", {1}), {}}, {"go", "armed"}));
}

namespace {

/// Tiny two-agent system: verifier routes `ping` to the echo agent, which
/// emits an action and notifies the sink agent.
SystemModel echo_system() {
    SystemModel m;
    m.vocabulary = {"ping", "note", "seed"};
    m.controllable = {"ping"};
    m.verifier = "ver";
    m.routes = {{"ping", "echo"}};

    AgentProgram ver;
    ver.name = "ver";

    AgentProgram echo;
    echo.name = "echo";
    Plan p;
    p.id = "echo/ping";
    p.trigger = pat("ping", {v("N")});
    p.body = {Step::emit(pat("pong", {v("N")})), Step::send("sink", pat("note", {v("N")}))};
    echo.plans = {p};

    AgentProgram sink;
    sink.name = "sink";
    Plan q;
    q.id = "sink/note";
    q.trigger = pat("note", {v("N")});
    q.body = {Step::emit(pat("noted", {v("N")}))};
    sink.plans = {q};

    m.agents = {ver, echo, sink};
    return m;
}

} // namespace

TEST_CASE("run_system: empty injection fires only initial goals") {
    SystemModel m = echo_system();
    m.agents[1].initial_goals = {"boot"};
    Plan boot;
    boot.id = "echo/boot";
    boot.goal_trigger = true;
    boot.trigger.name = "boot";
    boot.body = {Step::emit(pat("booted"))};
    m.agents[1].plans.insert(m.agents[1].plans.begin(), boot);

    ExecutionTrace t = run_system(m, {}, 50);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].plan_id == "echo/boot");
    CHECK_FALSE(t.truncated);
}

TEST_CASE("run_system: injected beliefs flow one per cycle and cascade") {
    SystemModel m = echo_system();
    BeliefSet inj{{b("ping", {1}), b("ping", {2})}};
    ExecutionTrace t = run_system(m, inj, 50);
    // Two echo firings and two sink firings, echo before sink per ping.
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].agent == "echo");
    CHECK(t.steps[0].actions[0].to_string() == "pong(1)");
    CHECK(t.steps[1].agent == "echo");
    CHECK(t.steps[2].agent == "sink");
    CHECK(t.steps[3].agent == "sink");
    // Monotone causality: cycles non-decreasing, sink strictly after echo.
    CHECK(t.steps[0].cycle < t.steps[2].cycle);
    for (std::size_t i = 1; i < t.steps.size(); ++i)
        CHECK(t.steps[i - 1].cycle <= t.steps[i].cycle);
}

TEST_CASE("run_system: deterministic replay") {
    SystemModel m = echo_system();
    BeliefSet inj{{b("ping", {7}), b("ping", {3}), b("ping", {7})}};
    ExecutionTrace a = run_system(m, inj, 50);
    ExecutionTrace c = run_system(m, inj, 50);
    REQUIRE(a.steps.size() == c.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].agent == c.steps[i].agent);
        CHECK(a.steps[i].plan_id == c.steps[i].plan_id);
        CHECK(a.steps[i].cycle == c.steps[i].cycle);
    }
}

TEST_CASE("run_system: rejects out-of-vocabulary injection") {
    SystemModel m = echo_system();
    CHECK_THROWS_AS(run_system(m, BeliefSet{{b("warp", {1})}}, 50), VocabularyError);
}

TEST_CASE("run_system: non-terminating system is flagged truncated") {
    SystemModel m = echo_system();
    // Echo agent re-sends itself `seed` forever.
    Plan loop;
    loop.id = "echo/loop";
    loop.trigger = pat("seed");
    loop.body = {Step::send("echo", pat("seed"))};
    m.agents[1].plans = {loop};
    m.agents[1].initial_beliefs = {};
    m.controllable = {"ping", "seed"};
    m.routes["seed"] = "echo";
    ExecutionTrace t = run_system(m, BeliefSet{{b("seed")}}, 40);
    CHECK(t.truncated);
}

TEST_CASE("plan order: permuting disjoint plans preserves traces, swapping rivals does not") {
    SystemModel m = echo_system();
    Plan on_a;
    on_a.id = "pa";
    on_a.trigger = pat("ping", {g(1)});
    on_a.body = {Step::emit(pat("saw_one"))};
    Plan on_b;
    on_b.id = "pb";
    on_b.trigger = pat("ping", {g(2)});
    on_b.body = {Step::emit(pat("saw_two"))};

    // Disjoint triggers: order is irrelevant.
    m.agents[1].plans = {on_a, on_b};
    ExecutionTrace t1 = run_system(m, BeliefSet{{b("ping", {2})}}, 20);
    m.agents[1].plans = {on_b, on_a};
    ExecutionTrace t2 = run_system(m, BeliefSet{{b("ping", {2})}}, 20);
    REQUIRE(t1.steps.size() == t2.steps.size());
    CHECK(t1.steps[0].plan_id == t2.steps[0].plan_id);

    // Overlapping triggers: the earlier-declared plan wins.
    Plan rival = on_a;
    rival.id = "rival";
    rival.trigger = pat("ping", {v("N")});
    rival.body = {Step::emit(pat("rivaled"))};
    m.agents[1].plans = {on_a, rival};
    ExecutionTrace t3 = run_system(m, BeliefSet{{b("ping", {1})}}, 20);
    m.agents[1].plans = {rival, on_a};
    ExecutionTrace t4 = run_system(m, BeliefSet{{b("ping", {1})}}, 20);
    CHECK(t3.steps[0].plan_id == "pa");
    CHECK(t4.steps[0].plan_id == "rival");
}

TEST_CASE("parser: plan line grammar") {
    Plan p = parse_plan_line(
        "on +request(K) when ready(K) & not bored do emit voice(K); send robot ready(K)");
    CHECK_FALSE(p.goal_trigger);
    CHECK(p.trigger.to_string() == "request(K)");
    REQUIRE(p.context.size() == 2);
    CHECK(p.context[1].negated);
    REQUIRE(p.body.size() == 2);
    CHECK(p.body[0].kind == Step::Kind::emit_action);
    CHECK(p.body[1].kind == Step::Kind::send_belief);
    CHECK(p.body[1].target == "robot");
}

TEST_CASE("parser: full system text and vocabulary rejection") {
    const std::string good = R"(
# toy system
vocab ping note
controllable ping
verifier ver
route ping echo
agent ver
agent echo
plan echo on +ping(N) do emit pong(N); send sink note(N)
agent sink
plan sink on +note(N) do emit noted(N)
)";
    SystemModel m = parse_system(good);
    CHECK(m.agents.size() == 3);
    ExecutionTrace t = run_system(m, BeliefSet{{b("ping", {5})}}, 20);
    CHECK(t.steps.size() == 2);

    const std::string bad_vocab = R"(
vocab ping
controllable ping
verifier ver
route ping echo
agent ver
agent echo
plan echo on +pingg(N) do emit pong(N)
)";
    CHECK_THROWS(parse_system(bad_vocab));

    const std::string bad_target = R"(
vocab ping
controllable ping
verifier ver
route ping echo
agent ver
agent echo
plan echo on +ping(N) do send nowhere ping(N)
)";
    CHECK_THROWS(parse_system(bad_target));
}

TEST_CASE("vocabulary closure: every belief in a run is initial, injected, sent or self-added") {
    // The echo system only ever produces note beliefs from sends; spot-check
    // by instrumenting sources on a run.
    SystemModel m = echo_system();
    ExecutionTrace t = run_system(m, BeliefSet{{b("ping", {4})}}, 20);
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[1].actions[0].to_string() == "noted(4)");
}
