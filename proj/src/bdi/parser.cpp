#include "hribench/bdi/parser.hpp"

#include <cctype>
#include <sstream>

namespace hribench::bdi {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw ParseError(line, std::string("expected '") + c + "'");
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError(line, "expected identifier");
        return text.substr(start, pos - start);
    }
    std::string keyword() { // like word() but also allows +, !
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '!'))
            return std::string(1, text[pos++]);
        return word();
    }
};

Term parse_term(Cursor& c) {
    c.skip_ws();
    if (c.pos < c.text.size() &&
        (std::isdigit(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '-')) {
        std::size_t start = c.pos;
        if (c.text[c.pos] == '-') ++c.pos;
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
            ++c.pos;
        return Term::ground(Atom{std::stoi(c.text.substr(start, c.pos - start))});
    }
    std::string w = c.word();
    if (std::isupper(static_cast<unsigned char>(w[0]))) return Term::variable(w);
    return Term::ground(Atom{w});
}

Pattern parse_pattern(Cursor& c) {
    Pattern p;
    p.name = c.word();
    if (c.consume('(')) {
        if (!c.consume(')')) {
            do {
                p.args.push_back(parse_term(c));
            } while (c.consume(','));
            c.expect(')');
        }
    }
    return p;
}

Belief pattern_to_ground_belief(const Pattern& p, int line) {
    Belief b;
    b.name = p.name;
    for (const auto& t : p.args) {
        if (t.kind == Term::Kind::variable)
            throw ParseError(line, "variable '" + t.var + "' not allowed in ground belief");
        b.args.push_back(t.value);
    }
    return b;
}

Context parse_context(Cursor& c) {
    Context ctx;
    do {
        ContextLiteral lit;
        c.skip_ws();
        if (c.text.compare(c.pos, 4, "not ") == 0) {
            lit.negated = true;
            c.pos += 4;
        }
        lit.pattern = parse_pattern(c);
        ctx.push_back(std::move(lit));
    } while (c.consume('&'));
    return ctx;
}

Step parse_step(Cursor& c) {
    std::string kw = c.word();
    if (kw == "emit") return Step::emit(parse_pattern(c));
    if (kw == "send") {
        std::string target = c.word();
        return Step::send(target, parse_pattern(c));
    }
    if (kw == "add") return Step::self(parse_pattern(c));
    if (kw == "achieve") return Step::achieve(c.word());
    throw ParseError(c.line, "unknown step '" + kw + "'");
}

Plan parse_plan_tail(Cursor& c) {
    Plan plan;
    std::string on = c.word();
    if (on != "on") throw ParseError(c.line, "expected 'on'");
    c.skip_ws();
    if (c.consume('!')) {
        plan.goal_trigger = true;
        plan.trigger.name = c.word();
    } else {
        c.expect('+');
        plan.trigger = parse_pattern(c);
    }
    c.skip_ws();
    if (c.text.compare(c.pos, 5, "when ") == 0) {
        c.pos += 5;
        plan.context = parse_context(c);
    }
    std::string kw = c.word();
    if (kw != "do") throw ParseError(c.line, "expected 'do'");
    do {
        plan.body.push_back(parse_step(c));
    } while (c.consume(';'));
    if (!c.eof()) throw ParseError(c.line, "trailing input");
    return plan;
}

} // namespace

Plan parse_plan_line(const std::string& text) {
    Cursor c{text, 0, 1};
    return parse_plan_tail(c);
}

SystemModel parse_system(const std::string& text) {
    SystemModel model;
    std::map<std::string, std::size_t> agent_index;
    std::string current_agent;
    int plan_counter = 0;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Cursor c{raw, 0, line_no};
        if (c.eof()) continue;
        std::string directive = c.word();

        if (directive == "vocab") {
            while (!c.eof()) model.vocabulary.insert(c.word());
        } else if (directive == "controllable") {
            while (!c.eof()) model.controllable.insert(c.word());
        } else if (directive == "verifier") {
            model.verifier = c.word();
        } else if (directive == "route") {
            std::string name = c.word();
            model.routes[name] = c.word();
        } else if (directive == "agent") {
            current_agent = c.word();
            if (agent_index.count(current_agent))
                throw ParseError(line_no, "duplicate agent '" + current_agent + "'");
            agent_index[current_agent] = model.agents.size();
            model.agents.push_back(AgentProgram{current_agent, {}, {}, {}});
        } else if (directive == "belief") {
            if (current_agent.empty()) throw ParseError(line_no, "belief outside agent block");
            Belief b = pattern_to_ground_belief(parse_pattern(c), line_no);
            model.agents[agent_index[current_agent]].initial_beliefs.push_back(std::move(b));
        } else if (directive == "goal") {
            if (current_agent.empty()) throw ParseError(line_no, "goal outside agent block");
            model.agents[agent_index[current_agent]].initial_goals.push_back(c.word());
        } else if (directive == "plan") {
            std::string owner = c.word();
            auto it = agent_index.find(owner);
            if (it == agent_index.end())
                throw ParseError(line_no, "plan for undeclared agent '" + owner + "'");
            Plan plan = parse_plan_tail(c);
            plan.id = owner + "/p" + std::to_string(++plan_counter);
            model.agents[it->second].plans.push_back(std::move(plan));
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    try {
        validate_model(model);
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
    return model;
}

} // namespace hribench::bdi
