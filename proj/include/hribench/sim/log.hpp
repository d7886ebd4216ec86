#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hribench::sim {

using json = nlohmann::json;

struct LogEvent {
    int tick = 0;
    std::string source; ///< robot | human | sensors | dog | monitor | sim
    std::string label;
    json payload = json::object();
};

/// Timestamped record of one simulated run. Serializes to one JSON object per
/// line; the first line is a schema-versioned header and the last line is the
/// end-of-test record.
struct SimulationLog {
    static constexpr int kSchema = 1;

    std::string scenario;
    int test_id = 0;
    std::string generator;
    std::uint64_t seed = 0;
    std::string profile; ///< as-found | fixed
    std::vector<LogEvent> events;
    std::string end_reason; ///< budget | quiescent
    int end_tick = 0;

    void add(int tick, std::string source, std::string label, json payload = json::object());

    std::string to_jsonl() const;
    static SimulationLog from_jsonl(const std::string& text);
};

} // namespace hribench::sim
