// Acceptance suite: one check per shipped guarantee, each printed as a
// PASS/FAIL line with its runtime. Exit status is non-zero when anything
// fails.

#include "hribench/cli/campaign.hpp"
#include "hribench/scen/scenario.hpp"
#include "hribench/util/rng.hpp"

#include "../support/ta_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

using namespace hribench;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& line) { g_notes.push_back(line); }

void criterion(int number, const std::string& name, const std::function<bool()>& body,
               double budget_seconds = 0.0) {
    auto start = Clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && seconds > budget_seconds) {
        ok = false;
        error = "runtime budget of " + std::to_string(budget_seconds) + "s exceeded";
    }
    std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds);
    for (const auto& line : g_notes) std::printf("       %s\n", line.c_str());
    g_notes.clear();
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
}

struct Campaign {
    std::vector<gen::ConcreteTest> tests;
    std::vector<sim::SimulationLog> logs;
    verdicts::CampaignReport report;
    std::vector<std::string> warnings;
};

Campaign run_campaign(sim::Scenario scenario, gen::Generator method,
                      const sim::ScenarioConfig& cfg, std::uint64_t seed = 1) {
    cli::CampaignSpec spec;
    spec.scenario = scenario;
    spec.method = method;
    spec.base_seed = seed;
    Campaign c;
    c.tests = cli::concrete_campaign(spec, &c.warnings);
    std::vector<verdicts::TestReport> reports;
    for (const auto& t : c.tests) {
        c.logs.push_back(sim::simulate(scenario, cfg, t));
        reports.push_back(verdicts::report_for(c.logs.back(), scenario, cfg));
    }
    c.report = verdicts::accumulate(reports);
    return c;
}

int fails(const verdicts::CampaignReport& r, int req_id) {
    return r.requirement_counts.at(req_id)[1];
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool same_tree(const fs::path& a, const fs::path& b) {
    std::vector<fs::path> fa, fb;
    for (auto& e : fs::recursive_directory_iterator(a))
        if (e.is_regular_file()) fa.push_back(fs::relative(e.path(), a));
    for (auto& e : fs::recursive_directory_iterator(b))
        if (e.is_regular_file()) fb.push_back(fs::relative(e.path(), b));
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return false;
    for (const auto& rel : fa)
        if (slurp(a / rel) != slurp(b / rel)) return false;
    return true;
}

// --- criterion bodies ------------------------------------------------------

bool structural_fidelity() {
    sim::StructuralReport h = sim::structural_selfcheck(sim::Scenario::handover);
    sim::StructuralReport c = sim::structural_selfcheck(sim::Scenario::homecare);
    bool ok = h.state_counts == std::vector<int>{14} &&
              h.transition_counts == std::vector<int>{22} &&
              c.state_counts == std::vector<int>{5, 6, 3, 3, 2} &&
              c.transition_counts == std::vector<int>{4, 5, 2, 2, 1};
    note("handover 14 states / 22 transitions; home-care 5,6,3,3,2 / 4,5,2,2,1");
    return ok;
}

gen::ConcreteTest release_probe(int code, bool timely) {
    using gen::Action;
    using gen::Param;
    gen::ConcreteTest t;
    t.id = code * 2 + timely;
    t.seed = 3;
    auto push = [&](int offset, gen::Actor actor, std::string label,
                    std::vector<Param> params) {
        Action a;
        a.offset = offset;
        a.actor = actor;
        a.label = std::move(label);
        a.params = std::move(params);
        t.actions.push_back(std::move(a));
    };
    push(0, gen::Actor::human, "request", {});
    push(4, gen::Actor::sensors, "set_gaze",
         {Param::fixed_word("class", (code & 4) ? "ok" : "nok"),
          Param::fixed("angle_deg", (code & 4) ? 12 : 55)});
    push(5, gen::Actor::sensors, "set_pressure",
         {Param::fixed_word("class", (code & 2) ? "ok" : "nok"),
          Param::fixed("level", (code & 2) ? 77 : 12)});
    push(6, gen::Actor::sensors, "set_location",
         {Param::fixed_word("class", (code & 1) ? "ok" : "nok"),
          Param::fixed("dist_mm", (code & 1) ? 140 : 420)});
    push(timely ? 90 : 420, gen::Actor::human, "ready", {});
    return t;
}

bool release_oracle() {
    sim::ScenarioConfig cfg = sim::ScenarioConfig::fixed();
    int releases = 0;
    bool ok = true;
    for (int code = 0; code < 8; ++code)
        for (bool timely : {true, false}) {
            sim::SimulationLog log =
                sim::simulate(sim::Scenario::handover, cfg, release_probe(code, timely));
            int released = 0, resolved = 0;
            for (const auto& e : log.events) {
                if (e.label == "leg_released") ++released;
                if (e.label == "leg_released" || e.label == "leg_discarded") ++resolved;
            }
            releases += released;
            if (code == 7 && timely) ok = ok && released == 1;
            else ok = ok && released == 0 && resolved == 1;
        }
    note("release in exactly 1 of 16 combinations (all-ok reading, timely readiness)");
    return ok && releases == 1;
}

// Random small networks shared with the unit suite's style.
ta::TaNetwork random_network(util::Rng& rng) {
    ta::TaNetwork net;
    int n_clocks = rng.range(1, 2);
    for (int c = 0; c < n_clocks; ++c)
        net.clocks.push_back({"x" + std::to_string(c), rng.range(2, 10)});
    int n_vars = rng.range(0, 2);
    for (int v = 0; v < n_vars; ++v) net.variables.push_back({"v" + std::to_string(v), 0, 3, 0});
    net.channels.push_back("c0");
    int n_auto = rng.range(1, 3);
    for (int a = 0; a < n_auto; ++a) {
        ta::Automaton aut;
        aut.name = "a" + std::to_string(a);
        int n_locs = rng.range(2, 6);
        for (int l = 0; l < n_locs; ++l) {
            aut.locations.push_back("l" + std::to_string(l));
            std::vector<ta::Comparison> inv;
            if (rng.chance(20)) {
                int clk = rng.range(0, static_cast<int>(net.clocks.size()) - 1);
                inv.push_back(ta::Comparison{ta::Comparison::Kind::clock, clk, ta::CmpOp::le,
                                             rng.range(1, net.clocks[clk].bound)});
            }
            aut.invariants.push_back(inv);
        }
        int n_edges = rng.range(1, 6);
        for (int e = 0; e < n_edges; ++e) {
            ta::Edge edge;
            edge.source = rng.range(0, n_locs - 1);
            edge.target = rng.range(0, n_locs - 1);
            if (rng.chance(60)) {
                if (rng.chance(50)) {
                    int clk = rng.range(0, static_cast<int>(net.clocks.size()) - 1);
                    edge.guard.push_back(ta::Comparison{ta::Comparison::Kind::clock, clk,
                                                        rng.chance(50) ? ta::CmpOp::ge
                                                                       : ta::CmpOp::le,
                                                        rng.range(0, net.clocks[clk].bound)});
                } else if (!net.variables.empty()) {
                    edge.guard.push_back(ta::Comparison{
                        ta::Comparison::Kind::var,
                        rng.range(0, static_cast<int>(net.variables.size()) - 1),
                        rng.chance(50) ? ta::CmpOp::eq : ta::CmpOp::le, rng.range(0, 3)});
                }
            }
            if (rng.chance(40)) edge.sync = ta::Sync{0, rng.chance(50)};
            if (rng.chance(50))
                edge.updates.push_back(
                    ta::Update{ta::Update::Kind::reset_clock,
                               rng.range(0, static_cast<int>(net.clocks.size()) - 1), 0});
            if (!net.variables.empty() && rng.chance(40))
                edge.updates.push_back(
                    ta::Update{rng.chance(50) ? ta::Update::Kind::set_var
                                              : ta::Update::Kind::add_var,
                               rng.range(0, static_cast<int>(net.variables.size()) - 1),
                               rng.range(0, 2)});
            aut.edges.push_back(edge);
        }
        net.automata.push_back(aut);
    }
    return net;
}

bool checker_oracle_equivalence() {
    int checked = 0, satisfied = 0, violated = 0;
    for (int trial = 0; trial < 220; ++trial) {
        util::Rng rng(util::Rng::mix(0xacce97, trial));
        ta::TaNetwork net = random_network(rng);

        int a = rng.range(0, static_cast<int>(net.automata.size()) - 1);
        int l = rng.range(0, static_cast<int>(net.automata[a].locations.size()) - 1);
        std::string pred = net.automata[a].name + "." + net.automata[a].locations[l];
        if (!net.variables.empty() && rng.chance(40))
            pred += " && v0 >= " + std::to_string(rng.range(0, 2));
        bool safety = rng.chance(50);
        ta::Query q = ta::parse_query(net, safety ? "A[] !(" + pred + ")" : "E<> " + pred);

        auto reach = ta_oracle::reachable(net);
        bool any_hit = false;
        int shortest = -1;
        bool all_hold = true;
        for (const auto& [packed, dist] : reach) {
            ta::State s = ta_oracle::unpack(net, packed);
            bool hit = eval_predicate(net, s, *q.predicate);
            if (safety) {
                all_hold = all_hold && hit;
            } else if (hit) {
                any_hit = true;
                if (shortest < 0 || dist < shortest) shortest = dist;
            }
        }

        ta::CheckResult res = ta::check(net, q);
        ++checked;
        if (!safety) {
            if (any_hit) {
                ++satisfied;
                if (res.verdict != ta::CheckResult::Verdict::satisfied) return false;
                if (!res.witness || !ta::witness_replays(net, *res.witness)) return false;
                if (static_cast<int>(res.witness->steps.size()) != shortest) return false;
            } else if (res.verdict != ta::CheckResult::Verdict::unsatisfied) {
                return false;
            }
        } else {
            if (all_hold) {
                if (res.verdict != ta::CheckResult::Verdict::holds) return false;
            } else {
                ++violated;
                if (res.verdict != ta::CheckResult::Verdict::violated) return false;
                if (!res.witness || !ta::witness_replays(net, *res.witness)) return false;
            }
        }
    }
    note("networks checked: " + std::to_string(checked) + ", satisfied witnesses: " +
         std::to_string(satisfied) + ", safety counterexamples: " + std::to_string(violated));
    return checked >= 200 && satisfied > 20 && violated > 20;
}

bool witness_replay(const Campaign& mc_handover) {
    const auto& def = scen::handover();
    int total = 0, reached = 0;
    for (std::size_t i = 0; i < mc_handover.tests.size(); ++i) {
        const auto& t = mc_handover.tests[i];
        if (t.intent.empty()) return false;
        ++total;
        if (scen::target_reached(def, t.intent, mc_handover.logs[i])) ++reached;
    }
    note(std::to_string(reached) + "/" + std::to_string(total) + " query targets reached");
    return total == 160 && reached == total;
}

bool cross_product(const Campaign& bdi_h, const Campaign& rand_h, const Campaign& bdi_c,
                   const Campaign& mc_c, const Campaign& rand_c) {
    auto nonzero = [](const verdicts::CampaignReport& r) {
        int n = 0;
        for (const auto& [id, hits] : r.subgroup_hits)
            if (hits > 0) ++n;
        return n;
    };
    bool bdi_all14 = nonzero(bdi_h.report) == 14;
    bool rand_gaps = rand_h.report.subgroup_hits.at(1) == 0 &&
                     rand_h.report.subgroup_hits.at(2) == 0 &&
                     rand_h.report.subgroup_hits.at(4) == 0;
    bool rand_cap = nonzero(rand_h.report) <= 11;
    bool care_all6 = nonzero(bdi_c.report) == 6 && nonzero(mc_c.report) == 6 &&
                     nonzero(rand_c.report) == 6;
    note("agent campaign subgroups hit: " + std::to_string(nonzero(bdi_h.report)) +
         "/14; pseudorandom: " + std::to_string(nonzero(rand_h.report)) +
         "/14 with rows 1,2,4 = " + std::to_string(rand_h.report.subgroup_hits.at(1)) + "," +
         std::to_string(rand_h.report.subgroup_hits.at(2)) + "," +
         std::to_string(rand_h.report.subgroup_hits.at(4)));
    note("home care subgroups: agents " + std::to_string(nonzero(bdi_c.report)) + "/6, checker " +
         std::to_string(nonzero(mc_c.report)) + "/6, pseudorandom " +
         std::to_string(nonzero(rand_c.report)) + "/6");
    return bdi_all14 && rand_gaps && rand_cap && care_all6;
}

bool assertion_findings(const Campaign& bdi_h, const Campaign& bdi_c, const Campaign& mc_c,
                        const Campaign& rand_c) {
    bool found = fails(bdi_h.report, 1) >= 1 && fails(bdi_h.report, 2) >= 1 &&
                 fails(bdi_h.report, 3) >= 1 && fails(bdi_h.report, 5) >= 1 &&
                 fails(bdi_h.report, 4) == 0 && fails(bdi_h.report, 6) == 0;
    bool care = true;
    for (const Campaign* c : {&bdi_c, &mc_c, &rand_c})
        for (int req = 1; req <= 4; ++req) care = care && fails(c->report, req) >= 1;
    note("handover agent campaign F counts: r1=" + std::to_string(fails(bdi_h.report, 1)) +
         " r2=" + std::to_string(fails(bdi_h.report, 2)) +
         " r3=" + std::to_string(fails(bdi_h.report, 3)) +
         " r4=" + std::to_string(fails(bdi_h.report, 4)) +
         " r5=" + std::to_string(fails(bdi_h.report, 5)) +
         " r6=" + std::to_string(fails(bdi_h.report, 6)));

    // Fixed profile over the same tests.
    sim::ScenarioConfig fixed = sim::ScenarioConfig::fixed();
    std::vector<verdicts::TestReport> h_fixed;
    for (const auto& t : bdi_h.tests)
        h_fixed.push_back(verdicts::report_for(
            sim::simulate(sim::Scenario::handover, fixed, t), sim::Scenario::handover, fixed));
    verdicts::CampaignReport hf = verdicts::accumulate(h_fixed);
    bool fixed_ok = fails(hf, 1) == 0 && fails(hf, 2) == 0 && fails(hf, 3) == 0 &&
                    fails(hf, 5) == 0;
    for (const Campaign* c : {&bdi_c, &mc_c, &rand_c}) {
        std::vector<verdicts::TestReport> c_fixed;
        for (const auto& t : c->tests)
            c_fixed.push_back(verdicts::report_for(
                sim::simulate(sim::Scenario::homecare, fixed, t), sim::Scenario::homecare,
                fixed));
        fixed_ok = fixed_ok && fails(verdicts::accumulate(c_fixed), 3) == 0;
    }
    note(std::string("fixed profile clears requirements 1-3, 5 (handover) and 3 (home care)"));
    return found && care && fixed_ok;
}

bool determinism() {
    fs::path root = fs::temp_directory_path() / "hribench_acceptance";
    fs::remove_all(root);
    bool ok = true;
    for (auto [scenario, method] :
         {std::pair{sim::Scenario::handover, gen::Generator::random},
          std::pair{sim::Scenario::homecare, gen::Generator::bdi}}) {
        fs::path runs[2];
        for (int round = 0; round < 2; ++round) {
            fs::path out = root / (sim::scenario_name(scenario) + "_" + std::to_string(round));
            runs[round] = out;
            cli::CampaignSpec spec;
            spec.scenario = scenario;
            spec.method = method;
            spec.count = scenario == sim::Scenario::handover ? 40 : 25;
            spec.out = out;
            cli::GenOutcome g = cli::cmd_gen(spec);
            sim::ScenarioConfig cfg = sim::ScenarioConfig::as_found();
            cli::cmd_run(g.dir, out / "logs", scenario, cfg, 4);
            cli::cmd_report(out / "logs", out / "report", scenario, cfg);
        }
        ok = ok && same_tree(runs[0], runs[1]);
    }
    note("two gen->run->report pipelines compared byte for byte per scenario");
    return ok;
}

bool universe_sizes() {
    bool sizes = scen::handover().vocabulary.entries.size() == 38 &&
                 scen::homecare().vocabulary.entries.size() == 5;
    bool rejects = false;
    try {
        gen::SetConstraint c;
        c.required = {bdi::Belief{"levitate", {1}, "self"}};
        gen::enumerate_belief_sets(scen::handover().vocabulary, c, 1, 1);
    } catch (const bdi::VocabularyError&) {
        rejects = true;
    }
    note("control vocabularies: 38 manufacturing entries, 5 home-care entries");
    return sizes && rejects;
}

bool curve_shape(const Campaign& bdi_h, const Campaign& rand_h, const Campaign& bdi_c,
                 const Campaign& rand_c) {
    auto monotone = [](const verdicts::CampaignReport& r) {
        for (std::size_t i = 1; i < r.accumulated_percent.size(); ++i)
            if (r.accumulated_percent[i] < r.accumulated_percent[i - 1]) return false;
        return true;
    };
    bool ok = monotone(bdi_h.report) && monotone(rand_h.report) && monotone(bdi_c.report) &&
              monotone(rand_c.report);
    ok = ok && bdi_h.report.final_accumulated >= rand_h.report.final_accumulated;
    ok = ok && bdi_c.report.final_accumulated >= rand_c.report.final_accumulated;

    // The agent campaigns also reach the as-found coverage ceiling: every
    // branch point except the guards only the fixed profile runs.
    for (auto [campaign, scenario] :
         {std::pair{&bdi_h, sim::Scenario::handover}, {&bdi_c, sim::Scenario::homecare}}) {
        double total = static_cast<double>(sim::branch_points(scenario).size());
        double fixed_only =
            static_cast<double>(sim::fixed_profile_branch_points(scenario).size());
        double ceiling = 100.0 * (total - fixed_only) / total;
        ok = ok && campaign->report.final_accumulated >= ceiling - 1e-9;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "final accumulated coverage: handover agents %.2f%% vs pseudorandom %.2f%%; "
                  "home care %.2f%% vs %.2f%%",
                  bdi_h.report.final_accumulated, rand_h.report.final_accumulated,
                  bdi_c.report.final_accumulated, rand_c.report.final_accumulated);
    note(buf);
    return ok;
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    sim::ScenarioConfig as_found = sim::ScenarioConfig::as_found();

    criterion(1, "structural fidelity of both controllers", structural_fidelity, 1.0);
    criterion(2, "release decision brute-force oracle", release_oracle, 5.0);
    criterion(3, "checker agrees with the brute-force oracle on 220 random networks",
              checker_oracle_equivalence, 120.0);

    // Shared campaigns for the remaining criteria. The checker-based
    // handover campaign is generated here too; its runtime counts toward the
    // witness-replay check, the rest toward the cross-product budget.
    Campaign bdi_h, rand_h, mc_h, bdi_c, mc_c, rand_c;
    criterion(4, "every checker-derived test drives the simulator to its target", [&] {
        mc_h = run_campaign(sim::Scenario::handover, gen::Generator::mc, as_found);
        for (const auto& w : mc_h.warnings) note("generation warning: " + w);
        return mc_h.warnings.empty() && mc_h.tests.size() == 160 && witness_replay(mc_h);
    });
    criterion(5, "cross-product coverage reproduces the published shape", [&] {
        bdi_h = run_campaign(sim::Scenario::handover, gen::Generator::bdi, as_found);
        rand_h = run_campaign(sim::Scenario::handover, gen::Generator::random, as_found);
        bdi_c = run_campaign(sim::Scenario::homecare, gen::Generator::bdi, as_found);
        mc_c = run_campaign(sim::Scenario::homecare, gen::Generator::mc, as_found);
        rand_c = run_campaign(sim::Scenario::homecare, gen::Generator::random, as_found);
        bool sizes = bdi_h.tests.size() == 160 && rand_h.tests.size() == 160 &&
                     bdi_c.tests.size() == 50 && mc_c.tests.size() == 50 &&
                     rand_c.tests.size() == 50;
        return sizes && cross_product(bdi_h, rand_h, bdi_c, mc_c, rand_c);
    }, 300.0);
    criterion(6, "assertion findings match the as-found defects and clear when fixed",
              [&] { return assertion_findings(bdi_h, bdi_c, mc_c, rand_c); });
    criterion(7, "gen -> run -> report is byte-for-byte reproducible", determinism);
    criterion(8, "control vocabulary sizes and constraint rejection", universe_sizes);
    criterion(9, "accumulated coverage is monotone and agents dominate pseudorandom",
              [&] { return curve_shape(bdi_h, rand_h, bdi_c, rand_c); });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
