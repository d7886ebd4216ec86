#pragma once

#include "hribench/ta/network.hpp"
#include "hribench/ta/query.hpp"

namespace hribench::ta {

class NetworkParseError : public std::runtime_error {
public:
    NetworkParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parses the line-based network format (`#` starts a comment):
///
///   clock <name> <bound>
///   var <name> <min> <max> [= <init>]
///   chan <name>
///   automaton <name>
///   loc <name> [<invariant>]            invariant: clock upper bounds, && separated
///   init <name>
///   edge <src> -> <dst> [<guard>] {<updates>} [!<chan>|?<chan>] [@<label>]
///
/// Guards are `name op int` comparisons joined by `&&`. Updates are comma
/// separated: `x := 0` resets clock x, `v := c` assigns, `v += c` adds with
/// saturation at the domain. The guard, update, sync and label parts of an
/// edge are each optional.
TaNetwork parse_network(const std::string& text);

/// Query file: one query per line, `#` comments and blank lines ignored.
std::vector<Query> parse_query_file(const TaNetwork& net, const std::string& text);

} // namespace hribench::ta
