#include "hribench/bdi/ast.hpp"

#include <algorithm>
#include <sstream>

namespace hribench::bdi {

std::string atom_to_string(const Atom& a) {
    if (std::holds_alternative<int>(a)) return std::to_string(std::get<int>(a));
    return std::get<std::string>(a);
}

std::string Belief::to_string() const {
    if (args.empty()) return name;
    std::ostringstream os;
    os << name << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << atom_to_string(args[i]);
    }
    os << ')';
    return os.str();
}

std::string Term::to_string() const {
    return kind == Kind::variable ? var : atom_to_string(value);
}

std::string Pattern::to_string() const {
    if (args.empty()) return name;
    std::ostringstream os;
    os << name << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << args[i].to_string();
    }
    os << ')';
    return os.str();
}

namespace {

void check_pattern_vocab(const Pattern& p, const std::set<std::string>& vocab,
                         const std::string& where) {
    if (!vocab.count(p.name))
        throw VocabularyError("undeclared belief name '" + p.name + "' in " + where);
}

} // namespace

void validate_model(const SystemModel& model) {
    std::set<std::string> agent_names;
    for (const auto& a : model.agents) {
        if (!agent_names.insert(a.name).second)
            throw std::invalid_argument("duplicate agent name: " + a.name);
    }
    if (!agent_names.count(model.verifier))
        throw std::invalid_argument("verification agent '" + model.verifier + "' not in system");
    for (const auto& [name, target] : model.routes) {
        if (!model.controllable.count(name))
            throw VocabularyError("route for uncontrollable belief '" + name + "'");
        if (!agent_names.count(target))
            throw std::invalid_argument("route target '" + target + "' not in system");
    }
    for (const auto& name : model.controllable) {
        if (!model.vocabulary.count(name))
            throw VocabularyError("controllable belief '" + name + "' missing from vocabulary");
    }
    for (const auto& a : model.agents) {
        for (const auto& b : a.initial_beliefs) {
            if (b.name.empty()) throw std::invalid_argument("empty belief name");
            if (!model.vocabulary.count(b.name))
                throw VocabularyError("undeclared initial belief '" + b.name + "' in " + a.name);
        }
        for (const auto& p : a.plans) {
            const std::string where = "plan " + p.id + " of " + a.name;
            if (p.body.empty()) throw std::invalid_argument("empty plan body in " + where);
            if (!p.goal_trigger) check_pattern_vocab(p.trigger, model.vocabulary, where);
            for (const auto& lit : p.context)
                check_pattern_vocab(lit.pattern, model.vocabulary, where);
            for (const auto& s : p.body) {
                if (s.kind == Step::Kind::send_belief) {
                    if (!agent_names.count(s.target))
                        throw std::invalid_argument("send target '" + s.target + "' unknown in " +
                                                    where);
                    check_pattern_vocab(s.belief, model.vocabulary, where);
                } else if (s.kind == Step::Kind::add_self_belief) {
                    check_pattern_vocab(s.belief, model.vocabulary, where);
                }
            }
        }
    }
}

} // namespace hribench::bdi
