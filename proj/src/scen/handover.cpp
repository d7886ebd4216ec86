#include "hribench/scen/scenario.hpp"

#include "hribench/bdi/parser.hpp"
#include "hribench/ta/parser.hpp"

namespace hribench::scen {

using bdi::Belief;
using gen::ActionTemplate;
using gen::Actor;
using gen::Param;

namespace {

Belief ctl(const std::string& name, int leg) { return Belief{name, {bdi::Atom{leg}}, "self"}; }
Belief flag(const std::string& name) { return Belief{name, {}, "self"}; }

/// The 38 controllable beliefs of the manufacturing model: per leg (1..4) a
/// request, a readiness choice, a boredom choice and six sensor readings,
/// plus two global timing controls.
gen::VocabularySpec handover_vocabulary() {
    gen::VocabularySpec vocab;
    for (int leg = 1; leg <= 4; ++leg) {
        vocab.entries.push_back(ctl("request", leg));
        vocab.entries.push_back(ctl("ready", leg));
        vocab.entries.push_back(ctl("bored", leg));
        vocab.entries.push_back(ctl("gaze_ok", leg));
        vocab.entries.push_back(ctl("gaze_nok", leg));
        vocab.entries.push_back(ctl("pressure_ok", leg));
        vocab.entries.push_back(ctl("pressure_nok", leg));
        vocab.entries.push_back(ctl("location_ok", leg));
        vocab.entries.push_back(ctl("location_nok", leg));
    }
    vocab.entries.push_back(flag("slow_ready"));
    vocab.entries.push_back(flag("slow_sensors"));
    return vocab;
}

/// Agent model of the handover protocol. The verifier feeds the human and
/// sensor agents; the robot agent mirrors the controller closely enough to
/// order the protocol and paces each leg so that extracted timings stay
/// consistent with the simulated controller.
constexpr const char* kHandoverAgents = R"(
vocab request ready bored gaze_ok gaze_nok pressure_ok pressure_nok location_ok location_nok
vocab slow_ready slow_sensors
vocab signaled ready_note gave_up bored_note quit shutdown started leg_done
vocab paced paced2 paced3 paced4
vocab sense_request phase_p phase_l reading_done no_reading no_reading2 no_reading3
vocab tmo1 tmo2 tmo3 tmo4 tmo5
vocab ab1 ab2 ab3 ab4 ab5
controllable request ready bored gaze_ok gaze_nok pressure_ok pressure_nok location_ok location_nok
controllable slow_ready slow_sensors
verifier verifier
route request human
route ready human
route bored human
route slow_ready human
route slow_sensors human
route gaze_ok sensors
route gaze_nok sensors
route pressure_ok sensors
route pressure_nok sensors
route location_ok sensors
route location_nok sensors

agent verifier

agent human
plan human on +slow_sensors do send sensors slow_sensors
plan human on +request(K) do emit req_voice(K); send robot request(K)
plan human on +bored(K) when not request(K) do emit bored_now(K); send robot quit
plan human on +signaled(K) when bored(K) & ready(K) do emit ready_voice(K); emit bored_decide(K); send robot ready_note(K); send robot bored_note(K)
plan human on +signaled(K) when bored(K) & slow_sensors do emit bored_early(K); send robot bored_note(K)
plan human on +signaled(K) when bored(K) & slow_ready do emit bored_hold(K); send robot bored_note(K)
plan human on +signaled(K) when bored(K) do emit bored_mid(K); send robot bored_note(K)
plan human on +signaled(K) when ready(K) & slow_ready do emit ready_slow(K); send robot ready_note(K)
plan human on +signaled(K) when ready(K) do emit ready_voice(K); send robot ready_note(K)
plan human on +signaled(K) do send robot gave_up(K)

agent sensors
plan sensors on +sense_request(K) when slow_sensors do send robot no_reading(K)
plan sensors on +sense_request(K) when gaze_ok(K) & gaze_nok(K) do emit set_gaze_ok(K); emit set_gaze_nok_late(K); send robot gaze_ok(K); add phase_p(K)
plan sensors on +sense_request(K) when gaze_ok(K) do emit set_gaze_ok(K); send robot gaze_ok(K); add phase_p(K)
plan sensors on +sense_request(K) when gaze_nok(K) do emit set_gaze_nok(K); send robot gaze_nok(K); add phase_p(K)
plan sensors on +sense_request(K) do send robot no_reading(K)
plan sensors on +phase_p(K) when pressure_ok(K) & pressure_nok(K) do emit set_pressure_nok(K); emit set_pressure_ok_late(K); send robot pressure_ok(K); add phase_l(K)
plan sensors on +phase_p(K) when pressure_ok(K) do emit set_pressure_ok(K); send robot pressure_ok(K); add phase_l(K)
plan sensors on +phase_p(K) when pressure_nok(K) do emit set_pressure_nok(K); send robot pressure_nok(K); add phase_l(K)
plan sensors on +phase_p(K) do send robot no_reading2(K)
plan sensors on +phase_l(K) when location_ok(K) & location_nok(K) do emit set_location_ok(K); emit set_location_nok_late(K); send robot location_ok(K); send robot reading_done(K)
plan sensors on +phase_l(K) when location_ok(K) do emit set_location_ok(K); send robot location_ok(K); send robot reading_done(K)
plan sensors on +phase_l(K) when location_nok(K) do emit set_location_nok(K); send robot location_nok(K); send robot reading_done(K)
plan sensors on +phase_l(K) do send robot no_reading3(K)

agent robot
plan robot on +request(K) when not started(X) & not shutdown do add started(K); send human signaled(K)
plan robot on +ready_note(K) do send sensors sense_request(K)
plan robot on +reading_done(K) when gaze_ok(K) & pressure_ok(K) & location_ok(K) do emit release_leg(K); add leg_done(K)
plan robot on +reading_done(K) do emit discard_leg(K); add leg_done(K)
plan robot on +gave_up(K) when not tmo1(K) do add tmo1(K)
plan robot on +no_reading(K) when not tmo3(K) do add tmo3(K)
plan robot on +no_reading2(K) when not tmo4(K) do add tmo4(K)
plan robot on +no_reading3(K) when not tmo5(K) do add tmo5(K)
plan robot on +tmo1(K) do add tmo2(K)
plan robot on +tmo2(K) do add tmo3(K)
plan robot on +tmo3(K) do add tmo4(K)
plan robot on +tmo4(K) do add tmo5(K)
plan robot on +tmo5(K) do add leg_done(K)
plan robot on +bored_note(K) when not ab1(K) do add ab1(K)
plan robot on +ab1(K) do add ab2(K)
plan robot on +ab2(K) do add ab3(K)
plan robot on +ab3(K) do add ab4(K)
plan robot on +ab4(K) do add ab5(K)
plan robot on +ab5(K) when not ready_note(K) do add leg_done(K)
plan robot on +leg_done(K) when request(J) & not started(J) & not shutdown do add paced(J)
plan robot on +paced(J) do add paced2(J)
plan robot on +paced2(J) do add paced3(J)
plan robot on +paced3(J) do add paced4(J)
plan robot on +paced4(J) do add started(J); send human signaled(J)
plan robot on +quit do add shutdown
)";

std::map<std::string, ActionTemplate> handover_action_map() {
    auto human = [](std::string label, int delta) {
        return ActionTemplate{Actor::human, std::move(label),
                              {Param::range("phase_ms", 0, 99)}, delta};
    };
    auto sensor = [](std::string label, std::string cls, std::string param, int lo, int hi,
                     int delta) {
        return ActionTemplate{
            Actor::sensors, std::move(label),
            {Param::fixed_word("class", std::move(cls)), Param::range(std::move(param), lo, hi)},
            delta};
    };
    std::map<std::string, ActionTemplate> map;
    map["req_voice"] = human("request", 0);
    map["ready_voice"] = human("ready", 40);
    map["ready_slow"] = human("ready", 390);
    map["bored_now"] = human("bored", 0);
    map["bored_early"] = human("bored", -80);
    map["bored_hold"] = human("bored", -62);
    map["bored_mid"] = human("bored", 150);
    map["bored_decide"] = human("bored", 175);
    // The three channels land on one tick; the flickers revise them inside
    // the as-found decision window.
    map["set_gaze_ok"] = sensor("set_gaze", "ok", "angle_deg", 0, 30, 40);
    map["set_gaze_nok"] = sensor("set_gaze", "nok", "angle_deg", 31, 90, 40);
    map["set_gaze_nok_late"] = sensor("set_gaze", "nok", "angle_deg", 31, 90, 80);
    map["set_pressure_ok"] = sensor("set_pressure", "ok", "level", 40, 100, -5);
    map["set_pressure_nok"] = sensor("set_pressure", "nok", "level", 0, 39, -5);
    map["set_pressure_ok_late"] = sensor("set_pressure", "ok", "level", 40, 100, 10);
    map["set_location_ok"] = sensor("set_location", "ok", "dist_mm", 50, 250, -50);
    map["set_location_nok"] = sensor("set_location", "nok", "dist_mm", 251, 800, -50);
    map["set_location_nok_late"] = sensor("set_location", "nok", "dist_mm", 251, 800, -20);
    return map;
}

/// Automata model: the human issues activations, readiness and boredom; the
/// per-sensor automata choose ok / not-ok; the relay automaton publishes a
/// reading; the robot automaton mirrors the controller phases with paced,
/// conservative timing so witness schedules replay against the simulator.
constexpr const char* kHandoverNetwork = R"(
clock lt 55
var reqs 0 4 = 0
var started 0 4 = 0
var released 0 4 = 0
var discarded 0 1 = 0
var timedout 0 1 = 0
var tmo_cmd 0 1 = 0
var tmo_sense 0 1 = 0
var aborted 0 1 = 0
var bored_cnt 0 1 = 0
var gsel 0 1 = 0
var psel 0 1 = 0
var lsel 0 1 = 0
var gset 0 1 = 0
var pset 0 1 = 0
var lset 0 1 = 0
var got_reading 0 1 = 0
var quit 0 1 = 0
chan ready
chan triple
chan bored

automaton human
  loc active
  init active
  edge active -> active [reqs <= 3] {reqs += 1} @request
  edge active -> active !ready @ready
  edge active -> active [bored_cnt <= 0] {bored_cnt += 1} !bored @bored

automaton gaze
  loc free
  init free
  edge free -> free [gset == 0] {gsel := 1, gset := 1} @gaze_ok
  edge free -> free [gset == 0] {gsel := 0, gset := 1} @gaze_nok

automaton pressure
  loc free
  init free
  edge free -> free [pset == 0] {psel := 1, pset := 1} @pressure_ok
  edge free -> free [pset == 0] {psel := 0, pset := 1} @pressure_nok

automaton location
  loc free
  init free
  edge free -> free [lset == 0] {lsel := 1, lset := 1} @location_ok
  edge free -> free [lset == 0] {lsel := 0, lset := 1} @location_nok

automaton sensors
  loc armed
  init armed
  edge armed -> armed [gset == 1 && pset == 1 && lset == 1] !triple @publish

automaton robot
  loc idle
  loc prep [lt <= 4]
  loc awaiting [lt <= 35]
  loc sensing [lt <= 51]
  loc deciding [lt <= 52]
  loc wrap [lt <= 54]
  loc done
  loc out
  init idle
  edge idle -> prep [reqs > started] {started += 1, lt := 0} @consume
  edge idle -> done [released == 4] @complete
  edge idle -> out ?bored {quit := 1} @quit
  edge prep -> awaiting [lt >= 4] @signal
  edge prep -> wrap ?bored {aborted := 1} @abort_prep
  edge awaiting -> sensing [lt <= 33] ?ready @accept
  edge awaiting -> wrap [lt >= 35] {timedout := 1, tmo_cmd := 1} @tmo_await
  edge awaiting -> wrap ?bored {aborted := 1} @abort_await
  edge sensing -> deciding [lt <= 50] ?triple {got_reading := 1} @read
  edge sensing -> wrap [lt >= 51] {timedout := 1, tmo_sense := 1} @tmo_sense
  edge sensing -> wrap ?bored {aborted := 1} @abort_sense
  edge deciding -> wrap [gsel == 1 && psel == 1 && lsel == 1] {released += 1} @release
  edge deciding -> wrap [gsel == 0] {discarded := 1} @discard_g
  edge deciding -> wrap [gsel == 1 && psel == 0] {discarded := 1} @discard_p
  edge deciding -> wrap [gsel == 1 && psel == 1 && lsel == 0] {discarded := 1} @discard_l
  edge deciding -> wrap ?bored {aborted := 1} @abort_decide
  edge wrap -> idle [lt >= 54] {gset := 0, pset := 0, lset := 0} @next_leg
)";

std::map<std::string, ActionTemplate> handover_edge_map() {
    auto human = [](std::string label) {
        return ActionTemplate{Actor::human, std::move(label), {Param::range("phase_ms", 0, 99)},
                              0};
    };
    auto sensor = [](std::string label, std::string cls, std::string param, int lo, int hi) {
        return ActionTemplate{
            Actor::sensors, std::move(label),
            {Param::fixed_word("class", std::move(cls)), Param::range(std::move(param), lo, hi)},
            0};
    };
    std::map<std::string, ActionTemplate> map;
    map["request"] = human("request");
    map["ready"] = human("ready");
    map["bored"] = human("bored");
    map["gaze_ok"] = sensor("set_gaze", "ok", "angle_deg", 0, 30);
    map["gaze_nok"] = sensor("set_gaze", "nok", "angle_deg", 31, 90);
    map["pressure_ok"] = sensor("set_pressure", "ok", "level", 40, 100);
    map["pressure_nok"] = sensor("set_pressure", "nok", "level", 0, 39);
    map["location_ok"] = sensor("set_location", "ok", "dist_mm", 50, 250);
    map["location_nok"] = sensor("set_location", "nok", "dist_mm", 251, 800);
    return map;
}

/// The reachability suite. Queries stick to counters (never raw locations)
/// so their targets can be re-evaluated on simulation logs.
std::vector<std::string> handover_queries() {
    std::vector<std::string> qs;
    for (int k = 1; k <= 4; ++k)
        for (int code = 0; code < 8; ++code) {
            int g = (code >> 2) & 1, p = (code >> 1) & 1, l = code & 1;
            qs.push_back("E<> reqs == " + std::to_string(k) + " && got_reading >= 1 && gsel == " +
                         std::to_string(g) + " && psel == " + std::to_string(p) +
                         " && lsel == " + std::to_string(l));
        }
    for (int k = 1; k <= 4; ++k) qs.push_back("E<> released == " + std::to_string(k));
    for (int k = 1; k <= 4; ++k)
        qs.push_back("E<> reqs == " + std::to_string(k) + " && discarded >= 1");
    for (int k = 1; k <= 4; ++k)
        qs.push_back("E<> reqs == " + std::to_string(k) + " && tmo_cmd >= 1");
    for (int k = 1; k <= 4; ++k)
        qs.push_back("E<> reqs == " + std::to_string(k) + " && tmo_sense >= 1");
    for (int k = 1; k <= 4; ++k)
        qs.push_back("E<> reqs == " + std::to_string(k) + " && aborted >= 1");
    qs.push_back("E<> released >= 1 && timedout >= 1");
    qs.push_back("E<> released >= 1 && discarded >= 1");
    qs.push_back("E<> released >= 1 && aborted >= 1");
    qs.push_back("E<> discarded >= 1 && timedout >= 1");
    qs.push_back("E<> quit == 1");
    return qs; // 57 queries
}

gen::ActionAlphabet handover_alphabet() {
    gen::ActionAlphabet a;
    auto human = [&](std::string name, std::string label, int w, int max_occ, int lo, int hi) {
        gen::AlphabetEntry e;
        e.name = std::move(name);
        e.actor = Actor::human;
        e.label = std::move(label);
        e.params = {Param::range("phase_ms", 0, 99)};
        e.weight = w;
        e.max_occurrences = max_occ;
        e.min_gap = lo;
        e.max_gap = hi;
        a.entries.push_back(std::move(e));
    };
    auto sensor = [&](std::string name, std::string label, std::string cls, std::string param,
                      int lo, int hi, int w) {
        gen::AlphabetEntry e;
        e.name = std::move(name);
        e.actor = Actor::sensors;
        e.label = std::move(label);
        e.params = {Param::fixed_word("class", cls), Param::range(std::move(param), lo, hi)};
        e.weight = w;
        e.min_gap = 5;
        e.max_gap = 80;
        a.entries.push_back(std::move(e));
    };
    human("request", "request", 5, 4, 5, 120);
    human("ready", "ready", 5, 1 << 20, 5, 120);
    human("bored", "bored", 1, 1 << 20, 10, 200);
    sensor("gaze_ok", "set_gaze", "ok", "angle_deg", 0, 30, 2);
    sensor("gaze_nok", "set_gaze", "nok", "angle_deg", 31, 90, 1);
    sensor("pressure_ok", "set_pressure", "ok", "level", 40, 100, 2);
    sensor("pressure_nok", "set_pressure", "nok", "level", 0, 39, 1);
    sensor("location_ok", "set_location", "ok", "dist_mm", 50, 250, 2);
    sensor("location_nok", "set_location", "nok", "dist_mm", 251, 800, 1);
    a.max_offset = 2600;
    return a;
}

// --- Campaign recipe ------------------------------------------------------

/// Per-leg plan of one recipe entry.
struct LegPlan {
    enum class Readiness { ready, slow, none, bored, ready_and_bored };
    Readiness readiness = Readiness::ready;
    int combo = 7;          ///< gaze/pressure/location bits; -1 = no sensor beliefs
    int flicker_mask = 0;   ///< bit 2 gaze, bit 1 pressure, bit 0 location: inject both classes
    int missing_mask = 0;   ///< sensors to leave entirely unset
};

struct Recipe {
    std::vector<LegPlan> legs;
    bool slow_ready = false;
    bool slow_sensors = false;
    std::vector<int> lone_bored; ///< bored(k) without request(k)
};

LegPlan release_leg() { return LegPlan{}; }

bdi::BeliefSet build_set(const Recipe& r) {
    bdi::BeliefSet set;
    if (r.slow_ready) set.beliefs.push_back(flag("slow_ready"));
    if (r.slow_sensors) set.beliefs.push_back(flag("slow_sensors"));
    // Sensor beliefs first so the sensor agent digests them before any
    // sensing window opens.
    for (std::size_t i = 0; i < r.legs.size(); ++i) {
        const LegPlan& leg = r.legs[i];
        int k = static_cast<int>(i) + 1;
        if (leg.combo < 0) continue;
        struct Chan {
            int bit;
            const char* ok;
            const char* nok;
        };
        const Chan chans[3] = {{2, "gaze_ok", "gaze_nok"},
                               {1, "pressure_ok", "pressure_nok"},
                               {0, "location_ok", "location_nok"}};
        for (const auto& ch : chans) {
            if (leg.missing_mask & (1 << ch.bit)) continue;
            bool ok = leg.combo & (1 << ch.bit);
            bool flick = leg.flicker_mask & (1 << ch.bit);
            if (flick) {
                set.beliefs.push_back(ctl(ch.ok, k));
                set.beliefs.push_back(ctl(ch.nok, k));
            } else {
                set.beliefs.push_back(ctl(ok ? ch.ok : ch.nok, k));
            }
        }
    }
    for (std::size_t i = 0; i < r.legs.size(); ++i) {
        const LegPlan& leg = r.legs[i];
        int k = static_cast<int>(i) + 1;
        set.beliefs.push_back(ctl("request", k));
        switch (leg.readiness) {
        case LegPlan::Readiness::ready: set.beliefs.push_back(ctl("ready", k)); break;
        case LegPlan::Readiness::slow: set.beliefs.push_back(ctl("ready", k)); break;
        case LegPlan::Readiness::none: break;
        case LegPlan::Readiness::bored: set.beliefs.push_back(ctl("bored", k)); break;
        case LegPlan::Readiness::ready_and_bored:
            set.beliefs.push_back(ctl("ready", k));
            set.beliefs.push_back(ctl("bored", k));
            break;
        }
    }
    for (int k : r.lone_bored) set.beliefs.push_back(ctl("bored", k));
    return set;
}

std::vector<bdi::BeliefSet> handover_campaign() {
    std::vector<Recipe> recipes;

    auto legs_with_last = [&](int k, LegPlan last) {
        Recipe r;
        for (int i = 1; i < k; ++i) r.legs.push_back(release_leg());
        r.legs.push_back(last);
        return r;
    };

    // A: every reading combination at every leg count (32).
    for (int k = 1; k <= 4; ++k)
        for (int c = 0; c < 8; ++c) {
            LegPlan last;
            last.combo = c;
            recipes.push_back(legs_with_last(k, last));
        }
    // B: activation-only runs, the handover times out awaiting readiness (4).
    for (int k = 1; k <= 4; ++k) {
        Recipe r;
        for (int i = 0; i < k; ++i) {
            LegPlan leg;
            leg.readiness = LegPlan::Readiness::none;
            leg.combo = -1;
            r.legs.push_back(leg);
        }
        recipes.push_back(r);
    }
    // C: readiness arrives too late everywhere (4).
    for (int k = 1; k <= 4; ++k) {
        Recipe r;
        r.slow_ready = true;
        for (int i = 0; i < k; ++i) {
            LegPlan leg;
            leg.readiness = LegPlan::Readiness::slow;
            leg.combo = -1;
            r.legs.push_back(leg);
        }
        recipes.push_back(r);
    }
    // D: sensors never answer (4).
    for (int k = 1; k <= 4; ++k) {
        Recipe r;
        r.slow_sensors = true;
        for (int i = 0; i < k; ++i) {
            LegPlan leg;
            leg.combo = -1;
            r.legs.push_back(leg);
        }
        recipes.push_back(r);
    }
    // E: boredom while the robot awaits readiness, after clean legs (4).
    for (int k = 1; k <= 4; ++k) {
        LegPlan last;
        last.readiness = LegPlan::Readiness::bored;
        last.combo = -1;
        recipes.push_back(legs_with_last(k, last));
    }
    // F: a timeout leg then a bored leg (3).
    for (int k = 2; k <= 4; ++k) {
        Recipe r;
        for (int i = 1; i <= k - 2; ++i) r.legs.push_back(release_leg());
        LegPlan tmo;
        tmo.readiness = LegPlan::Readiness::none;
        tmo.combo = -1;
        r.legs.push_back(tmo);
        LegPlan bored;
        bored.readiness = LegPlan::Readiness::bored;
        bored.combo = -1;
        r.legs.push_back(bored);
        recipes.push_back(r);
    }
    // G: one flickering sensor, everything else fine (6). The flicker class
    // bits are irrelevant for the flickering channel (both classes are
    // injected); combo 7/5 keeps the other channels ok.
    for (int k = 1; k <= 2; ++k)
        for (int bit : {2, 1, 0}) {
            LegPlan last;
            last.flicker_mask = 1 << bit;
            last.combo = bit == 1 ? 5 : 7;
            recipes.push_back(legs_with_last(k, last));
        }
    // G2: flicker plus another degraded sensor (3).
    {
        LegPlan a;
        a.flicker_mask = 4;
        a.combo = 5; // gaze flickers, pressure not-ok
        recipes.push_back(legs_with_last(1, a));
        LegPlan b;
        b.flicker_mask = 2;
        b.combo = 1; // pressure flickers upward, gaze not-ok
        recipes.push_back(legs_with_last(1, b));
        LegPlan c;
        c.flicker_mask = 1;
        c.combo = 5; // location flickers, pressure not-ok
        recipes.push_back(legs_with_last(1, c));
    }
    // H: no activation at all, or boredom with no request (3).
    recipes.push_back(Recipe{});
    {
        Recipe r;
        r.lone_bored = {1};
        recipes.push_back(r);
        Recipe r2;
        r2.lone_bored = {1, 2};
        recipes.push_back(r2);
    }
    // J: the interesting combination first, clean legs after (21).
    for (int k = 2; k <= 4; ++k)
        for (int c = 0; c < 7; ++c) {
            Recipe r;
            LegPlan first;
            first.combo = c;
            r.legs.push_back(first);
            for (int i = 2; i <= k; ++i) r.legs.push_back(release_leg());
            recipes.push_back(r);
        }
    // K: a timeout first, then releases (3).
    for (int k = 2; k <= 4; ++k) {
        Recipe r;
        LegPlan first;
        first.readiness = LegPlan::Readiness::none;
        first.combo = -1;
        r.legs.push_back(first);
        for (int i = 2; i <= k; ++i) r.legs.push_back(release_leg());
        recipes.push_back(r);
    }
    // L: boredom first, then releases (3).
    for (int k = 2; k <= 4; ++k) {
        Recipe r;
        LegPlan first;
        first.readiness = LegPlan::Readiness::bored;
        first.combo = -1;
        r.legs.push_back(first);
        for (int i = 2; i <= k; ++i) r.legs.push_back(release_leg());
        recipes.push_back(r);
    }
    // P: one sensor never reports, the sensing window expires (12).
    for (int k = 1; k <= 4; ++k)
        for (int bit : {2, 1, 0}) {
            LegPlan last;
            last.missing_mask = 1 << bit;
            last.combo = 7;
            recipes.push_back(legs_with_last(k, last));
        }
    // Q: two sensors flicker at once (3).
    for (int mask : {6, 5, 3}) {
        LegPlan last;
        last.flicker_mask = mask;
        last.combo = 7;
        recipes.push_back(legs_with_last(1, last));
    }
    // S: two degraded legs in sequence (6).
    {
        const int pairs[6][2] = {{3, 5}, {5, 3}, {6, 3}, {1, 2}, {2, 4}, {4, 1}};
        for (const auto& pr : pairs) {
            Recipe r;
            LegPlan l1;
            l1.combo = pr[0];
            LegPlan l2;
            l2.combo = pr[1];
            r.legs = {l1, l2};
            recipes.push_back(r);
        }
    }
    // T: late readiness with sensors armed (2).
    for (int c : {0, 7}) {
        Recipe r;
        r.slow_ready = true;
        LegPlan leg;
        leg.readiness = LegPlan::Readiness::slow;
        leg.combo = c;
        r.legs.push_back(leg);
        recipes.push_back(r);
    }
    // U: four-leg mixtures (2).
    {
        Recipe r;
        LegPlan l1;
        l1.combo = 7;
        LegPlan l2;
        l2.combo = 3;
        LegPlan l3;
        l3.combo = 5;
        LegPlan l4;
        l4.combo = 6;
        r.legs = {l1, l2, l3, l4};
        recipes.push_back(r);

        Recipe r2;
        LegPlan m1;
        m1.combo = 7;
        LegPlan m2;
        m2.readiness = LegPlan::Readiness::bored;
        m2.combo = -1;
        LegPlan m3;
        m3.readiness = LegPlan::Readiness::none;
        m3.combo = -1;
        LegPlan m4;
        m4.combo = 0;
        r2.legs = {m1, m2, m3, m4};
        recipes.push_back(r2);
    }
    // V: flicker legs later in a long run (6).
    for (int k = 3; k <= 4; ++k)
        for (int bit : {2, 1, 0}) {
            LegPlan last;
            last.flicker_mask = 1 << bit;
            last.combo = bit == 1 ? 5 : 7;
            recipes.push_back(legs_with_last(k, last));
        }
    // X: boredom racing the decision (4).
    for (int k = 1; k <= 4; ++k) {
        LegPlan last;
        last.readiness = LegPlan::Readiness::ready_and_bored;
        last.combo = 7;
        recipes.push_back(legs_with_last(k, last));
    }
    // Y: boredom while the sensing window starves (4).
    for (int k = 1; k <= 4; ++k) {
        Recipe r;
        r.slow_sensors = true;
        for (int i = 1; i < k; ++i) {
            LegPlan leg;
            leg.combo = -1;
            r.legs.push_back(leg);
        }
        LegPlan last;
        last.readiness = LegPlan::Readiness::ready_and_bored;
        last.combo = -1;
        r.legs.push_back(last);
        recipes.push_back(r);
    }
    // BE: boredom during the pick / the hold-out, selected by the timing
    // modifier flags (2).
    {
        Recipe r;
        r.slow_sensors = true;
        LegPlan leg;
        leg.readiness = LegPlan::Readiness::bored;
        leg.combo = -1;
        r.legs.push_back(leg);
        recipes.push_back(r);

        Recipe r2;
        r2.slow_ready = true;
        LegPlan leg2;
        leg2.readiness = LegPlan::Readiness::bored;
        leg2.combo = -1;
        r2.legs.push_back(leg2);
        recipes.push_back(r2);
    }

    std::vector<bdi::BeliefSet> sets;
    sets.reserve(recipes.size());
    for (const auto& r : recipes) sets.push_back(build_set(r));
    return sets;
}

} // namespace

const ScenarioDef& handover() {
    static const ScenarioDef def = [] {
        ScenarioDef d;
        d.scenario = sim::Scenario::handover;
        d.vocabulary = handover_vocabulary();
        d.bdi.model = bdi::parse_system(kHandoverAgents);
        d.bdi.action_map = handover_action_map();
        d.bdi.ticks_per_cycle = 45;
        d.bdi.max_cycles = 200;
        d.mc.network = ta::parse_network(kHandoverNetwork);
        d.mc.edge_map = handover_edge_map();
        d.mc.ticks_per_ta_tick = 10;
        d.queries = handover_queries();
        d.alphabet = handover_alphabet();
        d.random_max_len = 10;
        d.default_count = 160;
        return d;
    }();
    return def;
}

std::vector<bdi::BeliefSet> handover_campaign_sets() { return handover_campaign(); }

} // namespace hribench::scen
