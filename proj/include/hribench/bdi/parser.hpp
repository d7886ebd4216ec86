#pragma once

#include "hribench/bdi/ast.hpp"

namespace hribench::bdi {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parses the line-based agent system format and validates it against its own
/// declarations. Grammar (one directive per line, `#` starts a comment):
///
///   vocab <name>...                     declared belief names
///   controllable <name>...              names the verifier may inject
///   verifier <agent>
///   route <belief-name> <agent>         delivery target for injected beliefs
///   agent <name>                        starts an agent block
///   belief <name>(<atoms>)              initial belief of the current agent
///   goal <identifier>                   initial goal of the current agent
///   plan <agent> on <trigger> [when <context>] do <step>; <step>...
///
/// Triggers are `+name(args)` for belief additions or `!name` for goals.
/// Context literals are belief patterns joined by `&`, optionally prefixed
/// with `not`. Steps: `emit label(args)` | `send <agent> <belief>` |
/// `add <belief>` | `achieve <goal>`. Arguments starting with an upper-case
/// letter are variables; integers and lower-case identifiers are ground.
SystemModel parse_system(const std::string& text);

/// Parses a single plan head+body line (the `plan ...` directive without the
/// leading keyword and agent). Used by tests and tooling.
Plan parse_plan_line(const std::string& text);

} // namespace hribench::bdi
