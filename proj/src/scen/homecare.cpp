#include "hribench/scen/scenario.hpp"

#include "hribench/bdi/parser.hpp"
#include "hribench/ta/parser.hpp"
#include "hribench/util/rng.hpp"

#include <set>

namespace hribench::scen {

using bdi::Belief;
using gen::ActionTemplate;
using gen::Actor;
using gen::Param;
using util::Rng;

namespace {

Belief ctl(const std::string& name) { return Belief{name, {}, "self"}; }

/// The five controls of the home-care model: the four known requests plus a
/// stand-in for any unknown one.
gen::VocabularySpec homecare_vocabulary() {
    gen::VocabularySpec vocab;
    vocab.entries = {ctl("req_feed"), ctl("req_clean"), ctl("req_fridge"), ctl("req_sink"),
                     ctl("req_invalid")};
    return vocab;
}

/// Agent model. The human relays requests; the dog reacts to the bustle:
/// it wanders near once an unknown command is shouted and charges the robot
/// mid-mission after the third feasible request; the collision sensor relays
/// contact to the robot's code agent.
constexpr const char* kHomecareAgents = R"(
vocab req_feed req_clean req_fridge req_sink req_invalid
vocab heard heard_invalid order seen1 seen2 hsent1 hsent2 hsent3 hsent4 bark collision_warning fell busy_with
controllable req_feed req_clean req_fridge req_sink req_invalid
verifier verifier
route req_feed human
route req_clean human
route req_fridge human
route req_sink human
route req_invalid human

agent verifier

agent human
plan human on +req_feed when hsent4 do emit cmd_feed_later; send robot order(feed); send dog heard(feed)
plan human on +req_feed when hsent3 do emit cmd_feed_late; add hsent4; send robot order(feed); send dog heard(feed)
plan human on +req_feed when hsent2 do emit cmd_feed_late; add hsent3; send robot order(feed); send dog heard(feed)
plan human on +req_feed when hsent1 do emit cmd_feed_late; add hsent2; send robot order(feed); send dog heard(feed)
plan human on +req_feed do emit cmd_feed; add hsent1; send robot order(feed); send dog heard(feed)
plan human on +req_clean when hsent4 do emit cmd_clean_later; send robot order(clean); send dog heard(clean)
plan human on +req_clean when hsent3 do emit cmd_clean_late; add hsent4; send robot order(clean); send dog heard(clean)
plan human on +req_clean when hsent2 do emit cmd_clean_late; add hsent3; send robot order(clean); send dog heard(clean)
plan human on +req_clean when hsent1 do emit cmd_clean_late; add hsent2; send robot order(clean); send dog heard(clean)
plan human on +req_clean do emit cmd_clean; add hsent1; send robot order(clean); send dog heard(clean)
plan human on +req_fridge when hsent4 do emit cmd_fridge_later; send robot order(fridge); send dog heard(fridge)
plan human on +req_fridge when hsent3 do emit cmd_fridge_late; add hsent4; send robot order(fridge); send dog heard(fridge)
plan human on +req_fridge when hsent2 do emit cmd_fridge_late; add hsent3; send robot order(fridge); send dog heard(fridge)
plan human on +req_fridge when hsent1 do emit cmd_fridge_late; add hsent2; send robot order(fridge); send dog heard(fridge)
plan human on +req_fridge do emit cmd_fridge; add hsent1; send robot order(fridge); send dog heard(fridge)
plan human on +req_sink when hsent4 do emit cmd_sink_later; send robot order(sink); send dog heard(sink)
plan human on +req_sink when hsent3 do emit cmd_sink_late; add hsent4; send robot order(sink); send dog heard(sink)
plan human on +req_sink when hsent2 do emit cmd_sink_late; add hsent3; send robot order(sink); send dog heard(sink)
plan human on +req_sink when hsent1 do emit cmd_sink_late; add hsent2; send robot order(sink); send dog heard(sink)
plan human on +req_sink do emit cmd_sink; add hsent1; send robot order(sink); send dog heard(sink)
plan human on +req_invalid when hsent4 do emit cmd_invalid_later; send robot order(invalid); send dog heard_invalid
plan human on +req_invalid when hsent3 do emit cmd_invalid_late; add hsent4; send robot order(invalid); send dog heard_invalid
plan human on +req_invalid when hsent2 do emit cmd_invalid_late; add hsent3; send robot order(invalid); send dog heard_invalid
plan human on +req_invalid when hsent1 do emit cmd_invalid_late; add hsent2; send robot order(invalid); send dog heard_invalid
plan human on +req_invalid do emit cmd_invalid; add hsent1; send robot order(invalid); send dog heard_invalid

agent dog
plan dog on +heard_invalid do emit dog_cross; emit dog_off
plan dog on +heard(W) when seen2 do emit dog_strike; send sensor bark
plan dog on +heard(W) when seen1 & not seen2 do add seen2
plan dog on +heard(W) when not seen1 do add seen1

agent sensor
plan sensor on +bark do send robot collision_warning

agent robot
plan robot on +order(W) do add busy_with(W)
plan robot on +collision_warning do add fell
)";

std::map<std::string, ActionTemplate> homecare_action_map() {
    auto cmd = [](std::string word, int delta) {
        return ActionTemplate{Actor::human,
                              "command",
                              {Param::fixed_word("word", std::move(word)),
                               Param::range("speed_mmps", 100, 350),
                               Param::range("phase_ms", 0, 99)},
                              delta};
    };
    std::map<std::string, ActionTemplate> map;
    map["cmd_feed"] = cmd("feed", 0);
    map["cmd_feed_late"] = cmd("feed", 450);
    map["cmd_feed_later"] = cmd("feed", 1100);
    map["cmd_clean"] = cmd("clean", 0);
    map["cmd_clean_late"] = cmd("clean", 450);
    map["cmd_clean_later"] = cmd("clean", 1100);
    map["cmd_fridge"] = cmd("fridge", 0);
    map["cmd_fridge_late"] = cmd("fridge", 450);
    map["cmd_fridge_later"] = cmd("fridge", 1100);
    map["cmd_sink"] = cmd("sink", 0);
    map["cmd_sink_late"] = cmd("sink", 450);
    map["cmd_sink_later"] = cmd("sink", 1100);
    map["cmd_invalid"] = ActionTemplate{
        Actor::human,
        "command",
        {Param::choice("word", {"dance", "jump", "sing"}), Param::range("speed_mmps", 100, 350),
         Param::range("phase_ms", 0, 99)},
        0};
    map["cmd_invalid_late"] = map["cmd_invalid"];
    map["cmd_invalid_late"].tick_delta = 450;
    map["cmd_invalid_later"] = map["cmd_invalid"];
    map["cmd_invalid_later"].tick_delta = 1100;
    map["dog_cross"] = ActionTemplate{Actor::dog, "dog_near", {}, 100};
    map["dog_off"] = ActionTemplate{Actor::dog, "dog_leave", {}, 300};
    map["dog_strike"] = ActionTemplate{Actor::dog, "dog_contact", {}, 650};
    return map;
}

/// Automata model: the human hands requests to the robot one at a time, the
/// dog opts to come near, charge or stay away, and the collision sensor
/// relays contact. Execution durations are upper bounds of the simulated
/// motions so witness schedules stay feasible.
constexpr const char* kHomecareNetwork = R"(
clock mt 71
clock dt 21
var issued_feed 0 3 = 0
var issued_clean 0 3 = 0
var issued_fridge 0 3 = 0
var issued_sink 0 3 = 0
var issued_invalid 0 3 = 0
var done_feed 0 3 = 0
var done_clean 0 3 = 0
var done_fridge 0 3 = 0
var done_sink 0 3 = 0
var fc_done 0 6 = 0
var valid_cnt 0 3 = 0
var fallen 0 1 = 0
var near 0 1 = 0
var visited 0 1 = 0
var moved 0 1 = 0
chan cmd_feed
chan cmd_clean
chan cmd_fridge
chan cmd_sink
chan bump
chan hit

automaton human
  loc active
  init active
  edge active -> active [valid_cnt <= 2] {issued_feed += 1, valid_cnt += 1} !cmd_feed @cmd_feed
  edge active -> active [valid_cnt <= 2] {issued_clean += 1, valid_cnt += 1} !cmd_clean @cmd_clean
  edge active -> active [valid_cnt <= 2] {issued_fridge += 1, valid_cnt += 1} !cmd_fridge @cmd_fridge
  edge active -> active [valid_cnt <= 2] {issued_sink += 1, valid_cnt += 1} !cmd_sink @cmd_sink
  edge active -> active [issued_invalid <= 2] {issued_invalid += 1} @cmd_invalid

automaton robot
  loc idle
  loc exec_feed [mt <= 70]
  loc exec_clean [mt <= 60]
  loc exec_fridge [mt <= 42]
  loc exec_sink [mt <= 42]
  loc returning [mt <= 40]
  loc downed
  init idle
  edge idle -> exec_feed ?cmd_feed {mt := 0, moved := 1} @go_feed
  edge idle -> exec_clean ?cmd_clean {mt := 0, moved := 1} @go_clean
  edge idle -> exec_fridge ?cmd_fridge {mt := 0, moved := 1} @go_fridge
  edge idle -> exec_sink ?cmd_sink {mt := 0, moved := 1} @go_sink
  edge exec_feed -> returning [mt >= 70] {done_feed += 1, fc_done += 1, mt := 0} @fin_feed
  edge exec_clean -> returning [mt >= 60] {done_clean += 1, fc_done += 1, mt := 0} @fin_clean
  edge exec_fridge -> returning [mt >= 42] {done_fridge += 1, mt := 0} @fin_fridge
  edge exec_sink -> returning [mt >= 42] {done_sink += 1, mt := 0} @fin_sink
  edge returning -> idle [mt >= 40] @home
  edge exec_feed -> downed ?hit {fallen := 1} @fall_feed
  edge exec_clean -> downed ?hit {fallen := 1} @fall_clean
  edge exec_fridge -> downed ?hit {fallen := 1} @fall_fridge
  edge exec_sink -> downed ?hit {fallen := 1} @fall_sink
  edge returning -> downed ?hit {fallen := 1} @fall_return

automaton dog
  loc away
  loc lurking
  loc pounce
  init away
  edge away -> lurking {near := 1, visited := 1} @dog_near
  edge lurking -> away {near := 0} @dog_leave
  edge away -> pounce [dt >= 20] {near := 1} !bump @dog_contact
  edge pounce -> lurking @dog_back

automaton sensor
  loc armed
  loc alerting
  init armed
  edge armed -> alerting ?bump @alert
  edge alerting -> armed !hit @relay
)";

std::map<std::string, ActionTemplate> homecare_edge_map() {
    auto cmd = [](std::string word) {
        return ActionTemplate{Actor::human,
                              "command",
                              {Param::fixed_word("word", std::move(word)),
                               Param::range("speed_mmps", 100, 350),
                               Param::range("phase_ms", 0, 99)},
                              0};
    };
    std::map<std::string, ActionTemplate> map;
    map["cmd_feed"] = cmd("feed");
    map["cmd_clean"] = cmd("clean");
    map["cmd_fridge"] = cmd("fridge");
    map["cmd_sink"] = cmd("sink");
    map["cmd_invalid"] = ActionTemplate{
        Actor::human,
        "command",
        {Param::choice("word", {"dance", "jump", "sing"}), Param::range("speed_mmps", 100, 350),
         Param::range("phase_ms", 0, 99)},
        0};
    map["dog_near"] = ActionTemplate{Actor::dog, "dog_near", {}, 0};
    map["dog_leave"] = ActionTemplate{Actor::dog, "dog_leave", {}, 0};
    map["dog_contact"] = ActionTemplate{Actor::dog, "dog_contact", {}, 0};
    return map;
}

/// 23 reachability queries covering request completions, multi-request
/// missions, invalid requests leaving the robot idle, and dog encounters.
std::vector<std::string> homecare_queries() {
    return {
        "E<> done_feed >= 1",
        "E<> done_clean >= 1",
        "E<> done_fridge >= 1",
        "E<> done_sink >= 1",
        "E<> fc_done >= 2",
        "E<> fc_done >= 3",
        "E<> done_feed >= 1 && done_clean >= 1",
        "E<> done_fridge >= 1 && done_sink >= 1",
        "E<> done_feed >= 2",
        "E<> done_clean >= 2",
        "E<> done_feed >= 1 && done_clean >= 1 && done_fridge >= 1",
        "E<> done_sink >= 1 && fc_done >= 2",
        "E<> issued_invalid >= 1 && moved == 0",
        "E<> issued_invalid >= 2 && moved == 0",
        "E<> issued_invalid >= 1 && done_feed >= 1",
        "E<> fallen == 1",
        "E<> fallen == 1 && issued_feed >= 1",
        "E<> fallen == 1 && issued_clean >= 1",
        "E<> fallen == 1 && issued_fridge >= 1",
        "E<> fallen == 1 && issued_sink >= 1",
        "E<> fallen == 1 && fc_done >= 1",
        "E<> visited == 1 && near == 0 && done_feed >= 1",
        "E<> near == 1 && moved == 0",
    };
}

gen::ActionAlphabet homecare_alphabet() {
    gen::ActionAlphabet a;
    auto cmd = [&](std::string name, Param word, int w) {
        gen::AlphabetEntry e;
        e.name = std::move(name);
        e.actor = Actor::human;
        e.label = "command";
        e.params = {std::move(word), Param::range("speed_mmps", 100, 350),
                    Param::range("phase_ms", 0, 99)};
        e.weight = w;
        e.min_gap = 50;
        e.max_gap = 800;
        a.entries.push_back(std::move(e));
    };
    cmd("feed", Param::fixed_word("word", "feed"), 4);
    cmd("clean", Param::fixed_word("word", "clean"), 4);
    cmd("fridge", Param::fixed_word("word", "fridge"), 3);
    cmd("sink", Param::fixed_word("word", "sink"), 3);
    cmd("invalid", Param::choice("word", {"dance", "jump", "sing"}), 2);

    auto dog = [&](std::string label, int w, int lo, int hi) {
        gen::AlphabetEntry e;
        e.name = label;
        e.actor = Actor::dog;
        e.label = std::move(label);
        e.weight = w;
        e.min_gap = lo;
        e.max_gap = hi;
        a.entries.push_back(std::move(e));
    };
    dog("dog_near", 2, 30, 600);
    dog("dog_contact", 1, 30, 600);
    dog("dog_leave", 2, 50, 400);
    a.max_offset = 5500;
    return a;
}

/// Command sequences for the agent campaign: a curated core guaranteeing the
/// interesting interaction shapes, then seeded sampling over ordered request
/// subsets until the target number of distinct sequences is reached.
std::vector<std::vector<std::string>> homecare_sequences(std::uint64_t seed, int target) {
    std::vector<std::vector<std::string>> core = {
        {},
        {"feed"},
        {"clean"},
        {"fridge"},
        {"sink"},
        {"invalid"},
        {"feed", "clean"},
        {"clean", "feed"},
        {"feed", "invalid"},
        {"invalid", "feed"},
        {"fridge", "sink"},
        {"sink", "fridge"},
        {"invalid", "clean"},
        {"feed", "clean", "fridge"},
        {"feed", "clean", "sink"},
        {"feed", "fridge", "clean"},
        {"clean", "feed", "sink"},
        {"feed", "sink", "clean"},
        {"clean", "fridge", "sink"},
        {"sink", "feed", "clean"},
        {"feed", "sink", "invalid"},
        {"invalid", "feed", "clean"},
        {"feed", "clean", "fridge", "sink"},
        {"clean", "feed", "sink", "fridge"},
        {"invalid", "clean", "feed", "sink"},
        {"feed", "clean", "fridge", "invalid", "sink"},
    };
    std::set<std::vector<std::string>> seen(core.begin(), core.end());
    std::vector<std::vector<std::string>> out = core;
    const std::vector<std::string> pool = {"feed", "clean", "fridge", "sink", "invalid"};
    Rng rng(Rng::mix(seed, 0xd09));
    int sampled = 0;
    while (static_cast<int>(out.size()) < target && sampled < target * 40) {
        ++sampled;
        int len = rng.range(1, 4);
        std::vector<std::string> seq;
        std::vector<std::string> avail = pool;
        for (int i = 0; i < len && !avail.empty(); ++i) {
            int at = static_cast<int>(rng.below(static_cast<std::uint32_t>(avail.size())));
            seq.push_back(avail[at]);
            avail.erase(avail.begin() + at);
        }
        if (seen.insert(seq).second) out.push_back(std::move(seq));
    }
    return out;
}

} // namespace

const ScenarioDef& homecare() {
    static const ScenarioDef def = [] {
        ScenarioDef d;
        d.scenario = sim::Scenario::homecare;
        d.vocabulary = homecare_vocabulary();
        d.bdi.model = bdi::parse_system(kHomecareAgents);
        d.bdi.action_map = homecare_action_map();
        d.bdi.ticks_per_cycle = 45;
        d.bdi.max_cycles = 100;
        d.mc.network = ta::parse_network(kHomecareNetwork);
        d.mc.edge_map = homecare_edge_map();
        d.mc.ticks_per_ta_tick = 10;
        d.queries = homecare_queries();
        d.alphabet = homecare_alphabet();
        d.random_max_len = 8;
        d.default_count = 50;
        return d;
    }();
    return def;
}

std::vector<bdi::BeliefSet> homecare_campaign_sets(std::uint64_t seed) {
    auto sequences = homecare_sequences(seed, 62);
    std::vector<bdi::BeliefSet> sets;
    sets.reserve(sequences.size());
    for (const auto& seq : sequences) {
        bdi::BeliefSet set;
        for (const auto& word : seq) set.beliefs.push_back(ctl("req_" + word));
        sets.push_back(std::move(set));
    }
    return sets;
}

} // namespace hribench::scen
