#include "hribench/cli/campaign.hpp"

#include "hribench/util/rng.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace hribench::cli {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string pad3(int n) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d", n);
    return buf;
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& extension) {
    std::vector<fs::path> files;
    if (!fs::exists(dir)) return files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == extension)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

int CampaignSpec::effective_count() const {
    if (count > 0) return count;
    return scen::get(scenario).default_count;
}

std::vector<gen::AbstractTest> abstract_tests(const CampaignSpec& spec,
                                              std::vector<std::string>* warnings) {
    const scen::ScenarioDef& def = scen::get(spec.scenario);
    std::vector<gen::AbstractTest> raw;

    switch (spec.method) {
    case gen::Generator::bdi: {
        auto sets = scen::bdi_campaign_sets(spec.scenario, spec.base_seed);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            try {
                gen::AbstractTest t = gen::bdi_generate(def.bdi, sets[i]);
                std::string intent;
                for (const auto& b : sets[i].beliefs)
                    intent += (intent.empty() ? "" : " ") + b.to_string();
                t.intent = intent;
                raw.push_back(std::move(t));
            } catch (const std::exception& e) {
                if (warnings)
                    warnings->push_back("belief set " + std::to_string(i) + ": " + e.what());
            }
        }
        break;
    }
    case gen::Generator::mc: {
        for (const auto& text : def.queries) {
            try {
                ta::Query q = ta::parse_query(def.mc.network, text);
                raw.push_back(gen::mc_generate(def.mc, q));
            } catch (const std::exception& e) {
                if (warnings) warnings->push_back("query '" + text + "': " + e.what());
            }
        }
        break;
    }
    case gen::Generator::random: {
        const int n = spec.effective_count();
        for (int i = 0; i < n; ++i) {
            raw.push_back(gen::random_generate(
                def.alphabet, util::Rng::mix(spec.base_seed, static_cast<std::uint64_t>(i)),
                def.random_max_len));
        }
        break;
    }
    }

    // Duplicate filtering by identical action sequences, keeping first
    // occurrences in order.
    std::vector<gen::AbstractTest> out;
    for (auto& t : raw) {
        bool dup = false;
        for (const auto& kept : out) dup = dup || kept.same_actions(t);
        if (spec.method != gen::Generator::random && dup) continue;
        t.id = static_cast<int>(out.size());
        out.push_back(std::move(t));
    }
    if (out.empty()) throw gen::GenerationError("campaign produced no abstract tests");
    return out;
}

std::vector<gen::ConcreteTest> concrete_campaign(const CampaignSpec& spec,
                                                 std::vector<std::string>* warnings) {
    auto abstracts = abstract_tests(spec, warnings);
    const int n = spec.effective_count();
    std::vector<gen::ConcreteTest> tests;
    tests.reserve(n);
    for (int i = 0; i < n; ++i) {
        const gen::AbstractTest& base = abstracts[i % abstracts.size()];
        gen::ConcreteTest t = gen::concretize(base, static_cast<std::uint64_t>(i));
        t.id = i;
        tests.push_back(std::move(t));
    }
    return tests;
}

GenOutcome cmd_gen(const CampaignSpec& spec) {
    GenOutcome outcome;
    auto tests = concrete_campaign(spec, &outcome.warnings);
    outcome.dir = spec.out / "tests" / sim::scenario_name(spec.scenario) /
                  gen::generator_name(spec.method);
    for (const auto& t : tests) {
        write_file(outcome.dir / (pad3(t.id) + ".test"), gen::serialize_test(t));
        ++outcome.written;
    }
    return outcome;
}

RunOutcome cmd_run(const fs::path& test_dir, const fs::path& log_dir, sim::Scenario scenario,
                   const sim::ScenarioConfig& cfg, int jobs) {
    RunOutcome outcome;
    outcome.dir = log_dir;
    auto files = sorted_files(test_dir, ".test");
    if (files.empty()) {
        outcome.warnings.push_back("no .test files under " + test_dir.string());
        fs::create_directories(log_dir);
        return outcome;
    }
    fs::create_directories(log_dir);

    std::vector<std::string> errors(files.size());
    std::vector<int> ok(files.size(), 0);
    jobs = std::max(1, jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                gen::ConcreteTest test = gen::parse_concrete_test(read_file(files[i]));
                sim::SimulationLog log = sim::simulate(scenario, cfg, test);
                write_file(log_dir / (files[i].stem().string() + ".jsonl"), log.to_jsonl());
                ok[i] = 1;
            } catch (const std::exception& e) {
                errors[i] = files[i].filename().string() + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < files.size(); ++i) {
        if (ok[i]) ++outcome.ok;
        else {
            ++outcome.failed;
            outcome.warnings.push_back(errors[i]);
        }
    }
    return outcome;
}

ReportOutcome cmd_report(const fs::path& log_dir, const fs::path& out_dir,
                         sim::Scenario scenario, const sim::ScenarioConfig& cfg) {
    ReportOutcome outcome;
    std::vector<verdicts::TestReport> tests;
    for (const auto& file : sorted_files(log_dir, ".jsonl")) {
        try {
            sim::SimulationLog log = sim::SimulationLog::from_jsonl(read_file(file));
            tests.push_back(verdicts::report_for(log, scenario, cfg));
        } catch (const std::exception& e) {
            outcome.warnings.push_back(file.filename().string() + ": " + e.what());
        }
    }
    outcome.report = verdicts::accumulate(tests);
    if (outcome.report.scenario.empty())
        outcome.report.scenario = sim::scenario_name(scenario);
    fs::create_directories(out_dir);
    write_file(out_dir / "campaign.json", verdicts::to_json(outcome.report));
    write_file(out_dir / "campaign.csv", verdicts::to_csv(outcome.report));
    write_file(out_dir / "curve.csv", verdicts::curve_csv(outcome.report));
    return outcome;
}

} // namespace hribench::cli
