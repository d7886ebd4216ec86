#include "hribench/gen/test_ir.hpp"

#include <sstream>

namespace hribench::gen {

std::string actor_name(Actor a) {
    switch (a) {
    case Actor::human: return "human";
    case Actor::sensors: return "sensors";
    case Actor::dog: return "dog";
    }
    return "?";
}

Actor actor_from_name(const std::string& name) {
    if (name == "human") return Actor::human;
    if (name == "sensors") return Actor::sensors;
    if (name == "dog") return Actor::dog;
    throw TestFormatError("unknown actor '" + name + "'");
}

std::string generator_name(Generator g) {
    switch (g) {
    case Generator::bdi: return "bdi";
    case Generator::mc: return "mc";
    case Generator::random: return "random";
    }
    return "?";
}

Generator generator_from_name(const std::string& name) {
    if (name == "bdi") return Generator::bdi;
    if (name == "mc") return Generator::mc;
    if (name == "random") return Generator::random;
    throw TestFormatError("unknown generator '" + name + "'");
}

Param Param::fixed(std::string name, int v) {
    Param p;
    p.kind = Kind::int_value;
    p.name = std::move(name);
    p.value = v;
    return p;
}

Param Param::range(std::string name, int lo, int hi) {
    Param p;
    p.kind = Kind::int_range;
    p.name = std::move(name);
    p.lo = lo;
    p.hi = hi;
    return p;
}

Param Param::fixed_word(std::string name, std::string w) {
    Param p;
    p.kind = Kind::word_value;
    p.name = std::move(name);
    p.word = std::move(w);
    return p;
}

Param Param::choice(std::string name, std::vector<std::string> words) {
    Param p;
    p.kind = Kind::word_choice;
    p.name = std::move(name);
    p.words = std::move(words);
    return p;
}

const Param* Action::find(const std::string& name) const {
    for (const auto& p : params)
        if (p.name == name) return &p;
    return nullptr;
}

void validate_actions(const std::vector<Action>& actions) {
    int last = 0;
    for (const auto& a : actions) {
        if (a.offset < last) throw TestFormatError("action offsets must be non-decreasing");
        if (a.label.empty()) throw TestFormatError("empty action label");
        last = a.offset;
    }
}

namespace {

constexpr const char* kElem = "∈"; // ∈

std::string serialize_param(const Param& p) {
    switch (p.kind) {
    case Param::Kind::int_value: return p.name + "=" + std::to_string(p.value);
    case Param::Kind::int_range:
        return p.name + kElem + "[" + std::to_string(p.lo) + ".." + std::to_string(p.hi) + "]";
    case Param::Kind::word_value: return p.name + "=" + p.word;
    case Param::Kind::word_choice: {
        std::string out = p.name + kElem + "{";
        for (std::size_t i = 0; i < p.words.size(); ++i) {
            if (i) out += "|";
            out += p.words[i];
        }
        return out + "}";
    }
    }
    return "";
}

std::string serialize_actions(const std::vector<Action>& actions) {
    std::ostringstream os;
    for (const auto& a : actions) {
        os << '@' << a.offset << ' ' << actor_name(a.actor) << ' ' << a.label;
        for (const auto& p : a.params) os << ' ' << serialize_param(p);
        os << '\n';
    }
    return os.str();
}

Param parse_param(const std::string& token) {
    auto eq = token.find('=');
    auto elem = token.find(kElem);
    if (eq != std::string::npos && (elem == std::string::npos || eq < elem)) {
        std::string name = token.substr(0, eq);
        std::string val = token.substr(eq + 1);
        if (val.empty()) throw TestFormatError("empty value in '" + token + "'");
        bool numeric = val[0] == '-' || (val[0] >= '0' && val[0] <= '9');
        if (numeric) return Param::fixed(name, std::stoi(val));
        return Param::fixed_word(name, val);
    }
    if (elem == std::string::npos) throw TestFormatError("bad param '" + token + "'");
    std::string name = token.substr(0, elem);
    std::string rest = token.substr(elem + std::string(kElem).size());
    if (rest.size() >= 2 && rest.front() == '[' && rest.back() == ']') {
        auto dots = rest.find("..");
        if (dots == std::string::npos) throw TestFormatError("bad range '" + token + "'");
        return Param::range(name, std::stoi(rest.substr(1, dots - 1)),
                            std::stoi(rest.substr(dots + 2, rest.size() - dots - 3)));
    }
    if (rest.size() >= 2 && rest.front() == '{' && rest.back() == '}') {
        std::vector<std::string> words;
        std::string body = rest.substr(1, rest.size() - 2);
        std::size_t start = 0;
        while (true) {
            auto bar = body.find('|', start);
            if (bar == std::string::npos) {
                words.push_back(body.substr(start));
                break;
            }
            words.push_back(body.substr(start, bar - start));
            start = bar + 1;
        }
        return Param::choice(name, std::move(words));
    }
    throw TestFormatError("bad param '" + token + "'");
}

struct ParsedFile {
    int id = 0;
    Generator generator = Generator::random;
    bool has_seed = false;
    std::uint64_t seed = 0;
    std::string intent;
    std::vector<Action> actions;
};

ParsedFile parse_file(const std::string& text) {
    ParsedFile out;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("#test", 0) == 0) {
            std::istringstream hs(line.substr(5));
            std::string gen_word;
            hs >> out.id >> gen_word;
            if (hs.fail()) throw TestFormatError("bad #test header");
            out.generator = generator_from_name(gen_word);
            std::uint64_t seed = 0;
            if (hs >> seed) {
                out.has_seed = true;
                out.seed = seed;
            }
            header_seen = true;
            continue;
        }
        if (line.rfind("#intent", 0) == 0) {
            std::string value = line.substr(7);
            if (!value.empty() && value[0] == ' ') value.erase(0, 1);
            out.intent = value;
            continue;
        }
        if (line[0] == '#') continue;
        if (line[0] != '@') throw TestFormatError("expected action line, got '" + line + "'");
        std::istringstream as(line.substr(1));
        Action a;
        std::string actor_word, token;
        as >> a.offset >> actor_word >> a.label;
        if (as.fail()) throw TestFormatError("bad action line '" + line + "'");
        a.actor = actor_from_name(actor_word);
        while (as >> token) a.params.push_back(parse_param(token));
        out.actions.push_back(std::move(a));
    }
    if (!header_seen) throw TestFormatError("missing #test header");
    validate_actions(out.actions);
    return out;
}

} // namespace

std::string serialize_test(const AbstractTest& t) {
    std::ostringstream os;
    os << "#test " << t.id << ' ' << generator_name(t.generator) << '\n';
    if (!t.intent.empty()) os << "#intent " << t.intent << '\n';
    os << serialize_actions(t.actions);
    return os.str();
}

std::string serialize_test(const ConcreteTest& t) {
    std::ostringstream os;
    os << "#test " << t.id << ' ' << generator_name(t.generator) << ' ' << t.seed << '\n';
    if (!t.intent.empty()) os << "#intent " << t.intent << '\n';
    os << serialize_actions(t.actions);
    return os.str();
}

AbstractTest parse_abstract_test(const std::string& text) {
    ParsedFile f = parse_file(text);
    AbstractTest t;
    t.id = f.id;
    t.generator = f.generator;
    t.intent = f.intent;
    t.actions = std::move(f.actions);
    return t;
}

ConcreteTest parse_concrete_test(const std::string& text) {
    ParsedFile f = parse_file(text);
    if (!f.has_seed) throw TestFormatError("concrete test requires a seed in the header");
    ConcreteTest t;
    t.id = f.id;
    t.generator = f.generator;
    t.seed = f.seed;
    t.intent = f.intent;
    t.actions = std::move(f.actions);
    for (const auto& a : t.actions)
        for (const auto& p : a.params)
            if (p.symbolic())
                throw TestFormatError("symbolic param '" + p.name + "' in concrete test");
    return t;
}

} // namespace hribench::gen
