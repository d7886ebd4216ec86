#include "hribench/ta/parser.hpp"

#include <cctype>
#include <sstream>

namespace hribench::ta {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(strip(s.substr(start)));
            return parts;
        }
        parts.push_back(strip(s.substr(start, at - start)));
        start = at + sep.size();
    }
}

CmpOp parse_op(const std::string& text, std::size_t& pos, int line) {
    auto two = text.substr(pos, 2);
    if (two == "<=") { pos += 2; return CmpOp::le; }
    if (two == ">=") { pos += 2; return CmpOp::ge; }
    if (two == "==") { pos += 2; return CmpOp::eq; }
    if (two == "!=") { pos += 2; return CmpOp::ne; }
    if (text[pos] == '<') { pos += 1; return CmpOp::lt; }
    if (text[pos] == '>') { pos += 1; return CmpOp::gt; }
    throw NetworkParseError(line, "expected comparison operator in '" + text + "'");
}

Comparison parse_comparison(const TaNetwork& net, const std::string& text, int line) {
    std::size_t pos = 0;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    std::string name = strip(text.substr(0, pos));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw NetworkParseError(line, "bad comparison '" + text + "'");
    Comparison cmp;
    cmp.op = parse_op(text, pos, line);
    std::string rhs_text = strip(text.substr(pos));
    if (!rhs_text.empty() &&
        (std::isdigit(static_cast<unsigned char>(rhs_text[0])) || rhs_text[0] == '-')) {
        try {
            cmp.rhs = std::stoi(rhs_text);
        } catch (...) {
            throw NetworkParseError(line, "bad constant in '" + text + "'");
        }
    } else {
        cmp.rhs_is_var = true;
        cmp.rhs_index = net.variable_index(rhs_text); // throws for undeclared names
    }
    for (const auto& c : net.clocks)
        if (c.name == name) {
            cmp.kind = Comparison::Kind::clock;
            cmp.index = net.clock_index(name);
            return cmp;
        }
    for (const auto& v : net.variables)
        if (v.name == name) {
            cmp.kind = Comparison::Kind::var;
            cmp.index = net.variable_index(name);
            return cmp;
        }
    throw NetworkParseError(line, "undeclared clock or variable '" + name + "'");
}

std::vector<Comparison> parse_guard(const TaNetwork& net, const std::string& text, int line) {
    std::vector<Comparison> out;
    if (strip(text).empty()) return out;
    for (const auto& part : split_on(text, "&&")) out.push_back(parse_comparison(net, part, line));
    return out;
}

Update parse_update(const TaNetwork& net, const std::string& text, int line) {
    Update u;
    std::size_t at = text.find("+=");
    if (at != std::string::npos) {
        std::string name = strip(text.substr(0, at));
        u.kind = Update::Kind::add_var;
        u.index = net.variable_index(name);
        u.value = std::stoi(strip(text.substr(at + 2)));
        return u;
    }
    at = text.find(":=");
    if (at == std::string::npos) throw NetworkParseError(line, "bad update '" + text + "'");
    std::string name = strip(text.substr(0, at));
    std::string value = strip(text.substr(at + 2));
    for (const auto& c : net.clocks)
        if (c.name == name) {
            if (value != "0") throw NetworkParseError(line, "clocks can only reset to 0");
            u.kind = Update::Kind::reset_clock;
            u.index = net.clock_index(name);
            return u;
        }
    u.kind = Update::Kind::set_var;
    u.index = net.variable_index(name);
    u.value = std::stoi(value);
    return u;
}

/// Extracts the first `open...close` section of `text`, erases it, and
/// returns the inside.
std::optional<std::string> take_section(std::string& text, char open, char close, int line) {
    std::size_t b = text.find(open);
    if (b == std::string::npos) return std::nullopt;
    std::size_t e = text.find(close, b + 1);
    if (e == std::string::npos)
        throw NetworkParseError(line, std::string("missing '") + close + "'");
    std::string inside = text.substr(b + 1, e - b - 1);
    text.erase(b, e - b + 1);
    return inside;
}

} // namespace

TaNetwork parse_network(const std::string& text) {
    TaNetwork net;
    Automaton* current = nullptr;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    // Location names are resolved lazily so `edge` lines may precede `loc`
    // lines textually; a first pass collects declarations per block instead.
    // Simpler: require loc lines before the edges that use them.
    auto loc_index = [&](const std::string& name) {
        if (!current) throw NetworkParseError(line_no, "no automaton block open");
        for (std::size_t i = 0; i < current->locations.size(); ++i)
            if (current->locations[i] == name) return static_cast<int>(i);
        throw NetworkParseError(line_no, "undeclared location '" + name + "'");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string directive;
        ls >> directive;

        if (directive == "clock") {
            ClockDecl c;
            ls >> c.name >> c.bound;
            if (ls.fail()) throw NetworkParseError(line_no, "bad clock declaration");
            net.clocks.push_back(c);
        } else if (directive == "var") {
            VarDecl v;
            std::string eq;
            ls >> v.name >> v.min >> v.max;
            if (ls.fail()) throw NetworkParseError(line_no, "bad variable declaration");
            v.init = v.min;
            if (ls >> eq) {
                if (eq != "=") throw NetworkParseError(line_no, "expected '='");
                ls >> v.init;
            }
            net.variables.push_back(v);
        } else if (directive == "chan") {
            std::string name;
            ls >> name;
            net.channels.push_back(name);
        } else if (directive == "automaton") {
            std::string name;
            ls >> name;
            net.automata.push_back(Automaton{name, {}, 0, {}, {}});
            current = &net.automata.back();
        } else if (directive == "loc") {
            if (!current) throw NetworkParseError(line_no, "loc outside automaton block");
            std::string name;
            ls >> name;
            std::string rest;
            std::getline(ls, rest);
            current->locations.push_back(name);
            std::vector<Comparison> inv;
            if (auto inside = take_section(rest, '[', ']', line_no))
                inv = parse_guard(net, *inside, line_no);
            current->invariants.push_back(std::move(inv));
        } else if (directive == "init") {
            std::string name;
            ls >> name;
            if (!current) throw NetworkParseError(line_no, "init outside automaton block");
            current->initial = loc_index(name);
        } else if (directive == "edge") {
            if (!current) throw NetworkParseError(line_no, "edge outside automaton block");
            std::string rest = line.substr(directive.size());
            Edge e;
            if (auto inside = take_section(rest, '{', '}', line_no))
                for (const auto& part : split_on(*inside, ","))
                    if (!part.empty()) e.updates.push_back(parse_update(net, part, line_no));
            if (auto inside = take_section(rest, '[', ']', line_no))
                e.guard = parse_guard(net, *inside, line_no);

            // What remains: src -> dst [!chan|?chan] [@label]
            std::istringstream es(rest);
            std::string src, arrow, dst, tail;
            es >> src >> arrow >> dst;
            if (arrow != "->") throw NetworkParseError(line_no, "expected '->'");
            e.source = loc_index(src);
            e.target = loc_index(dst);
            while (es >> tail) {
                if (tail[0] == '!' || tail[0] == '?') {
                    Sync sync;
                    sync.send = tail[0] == '!';
                    sync.channel = net.channel_index(tail.substr(1));
                    e.sync = sync;
                } else if (tail[0] == '@') {
                    e.label = tail.substr(1);
                } else {
                    throw NetworkParseError(line_no, "unexpected '" + tail + "'");
                }
            }
            current->edges.push_back(std::move(e));
        } else {
            throw NetworkParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    try {
        validate_network(net);
    } catch (const std::exception& e) {
        throw NetworkParseError(0, e.what());
    }
    return net;
}

std::vector<Query> parse_query_file(const TaNetwork& net, const std::string& text) {
    std::vector<Query> queries;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        queries.push_back(parse_query(net, line));
    }
    return queries;
}

} // namespace hribench::ta
