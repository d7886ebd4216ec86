#include "hribench/verdicts/report.hpp"

#include <cstdio>
#include <sstream>

namespace hribench::verdicts {

namespace {

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

TestReport report_for(const sim::SimulationLog& log, sim::Scenario scenario,
                      const sim::ScenarioConfig& cfg) {
    TestReport r;
    r.scenario = log.scenario;
    r.id = log.test_id;
    r.generator = log.generator;
    r.seed = log.seed;
    r.coverage = code_coverage(log, scenario);
    r.verdicts = judge(log, scenario, cfg);
    r.subgroups = classify_cross_product(log, scenario);
    return r;
}

CampaignReport accumulate(const std::vector<TestReport>& tests) {
    CampaignReport out;
    if (tests.empty()) return out;
    out.scenario = tests[0].scenario;
    const sim::Scenario scenario = sim::scenario_from_name(out.scenario);
    const auto& reqs = requirements(scenario);
    for (const auto& req : reqs) out.requirement_counts[req.id] = {0, 0, 0};
    for (int g = 1; g <= subgroup_count(scenario); ++g) out.subgroup_hits[g] = 0;

    std::set<std::string> union_covered;
    int total_points = tests[0].coverage.total;
    for (const auto& t : tests) {
        if (t.scenario != out.scenario)
            throw std::invalid_argument("cannot accumulate reports across scenarios");
        out.tests.push_back(t);
        union_covered.insert(t.coverage.covered.begin(), t.coverage.covered.end());
        out.accumulated_percent.push_back(
            100.0 * static_cast<double>(union_covered.size()) / total_points);
        for (std::size_t i = 0; i < t.verdicts.size(); ++i) {
            auto& counts = out.requirement_counts[reqs[i].id];
            switch (t.verdicts[i]) {
            case Verdict::P: ++counts[0]; break;
            case Verdict::F: ++counts[1]; break;
            case Verdict::NC: ++counts[2]; break;
            }
        }
        for (int g : t.subgroups) ++out.subgroup_hits[g];
    }
    out.final_accumulated = out.accumulated_percent.back();
    return out;
}

std::string to_json(const CampaignReport& report) {
    sim::json j;
    j["scenario"] = report.scenario;
    j["tests"] = sim::json::array();
    for (std::size_t i = 0; i < report.tests.size(); ++i) {
        const TestReport& t = report.tests[i];
        sim::json jt;
        jt["id"] = t.id;
        jt["generator"] = t.generator;
        jt["seed"] = t.seed;
        jt["coverage_percent"] = fixed4(t.coverage.percent);
        jt["accumulated_percent"] = fixed4(report.accumulated_percent[i]);
        jt["covered_branches"] = static_cast<int>(t.coverage.covered.size());
        sim::json verdicts = sim::json::array();
        for (const auto& v : t.verdicts) verdicts.push_back(verdict_name(v));
        jt["verdicts"] = verdicts;
        jt["subgroups"] = t.subgroups;
        j["tests"].push_back(std::move(jt));
    }
    sim::json reqs = sim::json::object();
    for (const auto& [id, counts] : report.requirement_counts)
        reqs[std::to_string(id)] = {{"P", counts[0]}, {"F", counts[1]}, {"NC", counts[2]}};
    j["requirements"] = reqs;
    sim::json groups = sim::json::object();
    for (const auto& [id, hits] : report.subgroup_hits) groups[std::to_string(id)] = hits;
    j["subgroups"] = groups;
    j["final_accumulated_percent"] = fixed4(report.final_accumulated);
    return j.dump(2) + "\n";
}

std::string to_csv(const CampaignReport& report) {
    std::ostringstream os;
    os << "id,generator,seed,coverage_percent,accumulated_percent";
    const sim::Scenario scenario = report.tests.empty()
                                       ? sim::Scenario::handover
                                       : sim::scenario_from_name(report.scenario);
    for (const auto& req : requirements(scenario)) os << ",req" << req.id;
    os << ",subgroups\n";
    for (std::size_t i = 0; i < report.tests.size(); ++i) {
        const TestReport& t = report.tests[i];
        os << t.id << ',' << t.generator << ',' << t.seed << ',' << fixed4(t.coverage.percent)
           << ',' << fixed4(report.accumulated_percent[i]);
        for (const auto& v : t.verdicts) os << ',' << verdict_name(v);
        os << ',';
        bool first = true;
        for (int g : t.subgroups) {
            if (!first) os << ' ';
            os << g;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::string curve_csv(const CampaignReport& report) {
    std::ostringstream os;
    os << "index,test_id,percent,accumulated\n";
    for (std::size_t i = 0; i < report.tests.size(); ++i)
        os << i << ',' << report.tests[i].id << ',' << fixed4(report.tests[i].coverage.percent)
           << ',' << fixed4(report.accumulated_percent[i]) << '\n';
    return os.str();
}

} // namespace hribench::verdicts
