#include "hribench/sim/log.hpp"

#include <sstream>

namespace hribench::sim {

void SimulationLog::add(int tick, std::string source, std::string label, json payload) {
    events.push_back(LogEvent{tick, std::move(source), std::move(label), std::move(payload)});
}

std::string SimulationLog::to_jsonl() const {
    std::ostringstream os;
    json header = {{"schema", kSchema},   {"scenario", scenario}, {"test", test_id},
                   {"generator", generator}, {"seed", seed},      {"profile", profile}};
    os << header.dump() << '\n';
    for (const auto& e : events) {
        json rec = {{"tick", e.tick}, {"source", e.source}, {"label", e.label}};
        if (!e.payload.empty()) rec["payload"] = e.payload;
        os << rec.dump() << '\n';
    }
    json footer = {{"label", "end_of_test"}, {"reason", end_reason}, {"tick", end_tick}};
    os << footer.dump() << '\n';
    return os.str();
}

SimulationLog SimulationLog::from_jsonl(const std::string& text) {
    SimulationLog log;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        if (!header_seen) {
            if (!rec.contains("schema") || rec["schema"].get<int>() != kSchema)
                throw std::runtime_error("missing or unsupported log schema");
            log.scenario = rec["scenario"].get<std::string>();
            log.test_id = rec["test"].get<int>();
            log.generator = rec["generator"].get<std::string>();
            log.seed = rec["seed"].get<std::uint64_t>();
            log.profile = rec.value("profile", "");
            header_seen = true;
            continue;
        }
        if (rec.value("label", "") == "end_of_test") {
            log.end_reason = rec.value("reason", "");
            log.end_tick = rec.value("tick", 0);
            continue;
        }
        LogEvent e;
        e.tick = rec["tick"].get<int>();
        e.source = rec["source"].get<std::string>();
        e.label = rec["label"].get<std::string>();
        if (rec.contains("payload")) e.payload = rec["payload"];
        log.events.push_back(std::move(e));
    }
    if (!header_seen) throw std::runtime_error("empty simulation log");
    return log;
}

} // namespace hribench::sim
