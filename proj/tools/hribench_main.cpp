#include "hribench/cli/campaign.hpp"
#include "hribench/ta/parser.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace hribench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2; ///< campaign finished with per-test failures
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int do_gen(const cli::CampaignSpec& spec) {
    cli::GenOutcome out = cli::cmd_gen(spec);
    print_warnings(out.warnings);
    std::cout << "wrote " << out.written << " tests to " << out.dir.string() << "\n";
    return kExitOk;
}

int do_run(const std::string& tests, const std::string& out, const std::string& scenario,
           const std::string& profile, int jobs) {
    sim::Scenario s = sim::scenario_from_name(scenario);
    sim::ScenarioConfig cfg = sim::ScenarioConfig::from_profile(profile);
    cli::RunOutcome res = cli::cmd_run(tests, out, s, cfg, jobs);
    print_warnings(res.warnings);
    std::cout << "simulated " << res.ok << " tests (" << res.failed << " failed) into "
              << res.dir.string() << "\n";
    return res.failed > 0 ? kExitPartial : kExitOk;
}

int do_report(const std::string& logs, const std::string& out, const std::string& scenario,
              const std::string& profile) {
    sim::Scenario s = sim::scenario_from_name(scenario);
    sim::ScenarioConfig cfg = sim::ScenarioConfig::from_profile(profile);
    cli::ReportOutcome res = cli::cmd_report(logs, out, s, cfg);
    print_warnings(res.warnings);
    std::cout << "reported " << res.report.tests.size() << " tests; accumulated coverage "
              << res.report.final_accumulated << "%\n";
    return res.warnings.empty() ? kExitOk : kExitPartial;
}

int do_selfcheck(const std::string& scenario) {
    sim::StructuralReport rep = sim::structural_selfcheck(sim::scenario_from_name(scenario));
    std::cout << rep.scenario << ": states";
    for (int s : rep.state_counts) std::cout << ' ' << s;
    std::cout << ", transitions";
    for (int t : rep.transition_counts) std::cout << ' ' << t;
    std::cout << ", " << rep.branch_point_count << " branch points\n";
    for (const auto& d : rep.details) std::cout << "  " << d << "\n";
    return kExitOk;
}

int do_check(const std::string& network_path, const std::string& queries_path) {
    ta::TaNetwork net = ta::parse_network(slurp(network_path));
    auto queries = ta::parse_query_file(net, slurp(queries_path));
    bool any_budget = false;
    for (const auto& q : queries) {
        try {
            ta::CheckResult res = ta::check(net, q);
            const char* verdict = "";
            switch (res.verdict) {
            case ta::CheckResult::Verdict::satisfied: verdict = "satisfied"; break;
            case ta::CheckResult::Verdict::unsatisfied: verdict = "unsatisfied"; break;
            case ta::CheckResult::Verdict::violated: verdict = "violated"; break;
            case ta::CheckResult::Verdict::holds: verdict = "holds"; break;
            }
            std::cout << q.text << " -> " << verdict;
            if (res.witness) std::cout << " (witness length " << res.witness->states.size() << ")";
            std::cout << "\n";
        } catch (const ta::BudgetExceeded& e) {
            std::cout << q.text << " -> error: " << e.what() << "\n";
            any_budget = true;
        }
    }
    return any_budget ? kExitPartial : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage-driven test campaigns for simulated HRI controllers"};
    app.require_subcommand(1);

    std::string scenario = "handover";
    std::string method = "random";
    std::string profile = "as-found";
    std::string out_dir = ".";
    std::string tests_dir, logs_dir, network_path, queries_path;
    int count = 0;
    int jobs = 1;
    std::uint64_t seed = 1;

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a campaign of test files");
    gen_cmd->add_option("--scenario", scenario)->check(CLI::IsMember({"handover", "homecare"}));
    gen_cmd->add_option("--method", method)->check(CLI::IsMember({"bdi", "mc", "random"}));
    gen_cmd->add_option("--count", count, "tests to emit (default per scenario)");
    gen_cmd->add_option("--seed", seed, "base seed");
    gen_cmd->add_option("--out", out_dir, "output root");

    CLI::App* run_cmd = app.add_subcommand("run", "simulate every test in a directory");
    run_cmd->add_option("--tests", tests_dir)->required();
    run_cmd->add_option("--out", out_dir, "log directory")->required();
    run_cmd->add_option("--scenario", scenario)->check(CLI::IsMember({"handover", "homecare"}));
    run_cmd->add_option("--profile", profile)->check(CLI::IsMember({"as-found", "fixed"}));
    run_cmd->add_option("--jobs", jobs, "parallel simulations");

    CLI::App* report_cmd = app.add_subcommand("report", "aggregate logs into campaign reports");
    report_cmd->add_option("--logs", logs_dir)->required();
    report_cmd->add_option("--out", out_dir, "report directory")->required();
    report_cmd->add_option("--scenario", scenario)
        ->check(CLI::IsMember({"handover", "homecare"}));
    report_cmd->add_option("--profile", profile)->check(CLI::IsMember({"as-found", "fixed"}));

    CLI::App* self_cmd = app.add_subcommand("selfcheck", "verify controller structure");
    self_cmd->add_option("--scenario", scenario)->check(CLI::IsMember({"handover", "homecare"}));

    CLI::App* check_cmd = app.add_subcommand("check", "run queries against a network file");
    check_cmd->add_option("--network", network_path)->required();
    check_cmd->add_option("--queries", queries_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            cli::CampaignSpec spec;
            spec.scenario = sim::scenario_from_name(scenario);
            spec.method = gen::generator_from_name(method);
            spec.count = count;
            spec.base_seed = seed;
            spec.out = out_dir;
            return do_gen(spec);
        }
        if (run_cmd->parsed()) return do_run(tests_dir, out_dir, scenario, profile, jobs);
        if (report_cmd->parsed()) return do_report(logs_dir, out_dir, scenario, profile);
        if (self_cmd->parsed()) return do_selfcheck(scenario);
        if (check_cmd->parsed()) return do_check(network_path, queries_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
