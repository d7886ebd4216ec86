#include "hribench/gen/generators.hpp"

#include "hribench/util/rng.hpp"

#include <algorithm>
#include <set>

namespace hribench::gen {

using util::Rng;

namespace {

void append_mapped(std::vector<Action>& actions, const ActionTemplate& tmpl, int model_ticks) {
    Action a;
    a.offset = std::max(0, model_ticks + tmpl.tick_delta);
    a.actor = tmpl.actor;
    a.label = tmpl.label;
    a.params = tmpl.params;
    actions.push_back(std::move(a));
}

void sort_actions(std::vector<Action>& actions) {
    std::stable_sort(actions.begin(), actions.end(),
                     [](const Action& a, const Action& b) { return a.offset < b.offset; });
}

} // namespace

AbstractTest bdi_generate(const BdiModelSpec& spec, const bdi::BeliefSet& beliefs) {
    bdi::ExecutionTrace trace = bdi::run_system(spec.model, beliefs, spec.max_cycles);
    if (trace.truncated) {
        std::string names;
        for (const auto& b : beliefs.beliefs) names += (names.empty() ? "" : ", ") + b.to_string();
        throw GenerationError("agent run did not quiesce for belief set {" + names + "}");
    }
    AbstractTest test;
    test.generator = Generator::bdi;
    for (const auto& step : trace.steps) {
        for (const auto& emitted : step.actions) {
            auto it = spec.action_map.find(emitted.name);
            if (it == spec.action_map.end()) continue; // robot or glue emission
            append_mapped(test.actions, it->second, step.cycle * spec.ticks_per_cycle);
        }
    }
    sort_actions(test.actions);
    return test;
}

bool VocabularySpec::contains(const bdi::Belief& b) const {
    for (const auto& e : entries)
        if (e == b) return true;
    return false;
}

std::vector<bdi::BeliefSet> enumerate_belief_sets(const VocabularySpec& vocab,
                                                  const SetConstraint& constraint, int count,
                                                  std::uint64_t seed) {
    if (count < 1) throw GenerationError("count must be >= 1");
    for (const auto& b : constraint.required)
        if (!vocab.contains(b))
            throw bdi::VocabularyError("required belief '" + b.to_string() +
                                       "' is outside the vocabulary");
    for (const auto& b : constraint.optional_pool)
        if (!vocab.contains(b))
            throw bdi::VocabularyError("optional belief '" + b.to_string() +
                                       "' is outside the vocabulary");
    for (const auto& f : constraint.forbidden) {
        for (const auto& r : constraint.required)
            if (f == r)
                throw GenerationError("constraint requires and forbids '" + f.to_string() + "'");
    }

    auto forbidden = [&](const bdi::Belief& b) {
        for (const auto& f : constraint.forbidden)
            if (f == b) return true;
        return false;
    };

    std::vector<bdi::BeliefSet> out;
    std::set<std::vector<bdi::Belief>> seen;
    Rng rng(Rng::mix(seed, 0x5e75));
    const int max_attempts = count * 200 + 200;
    for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
         ++attempt) {
        bdi::BeliefSet set;
        for (const auto& b : constraint.required) set.beliefs.push_back(b);
        for (const auto& b : constraint.optional_pool)
            if (!forbidden(b) && rng.chance(constraint.optional_percent))
                set.beliefs.push_back(b);
        if (seen.insert(set.beliefs).second) out.push_back(std::move(set));
    }
    if (static_cast<int>(out.size()) < count)
        throw GenerationError("constraint admits fewer than " + std::to_string(count) +
                              " distinct belief sets");
    return out;
}

AbstractTest mc_generate(const McModelSpec& spec, const ta::Query& query) {
    if (query.kind != ta::Query::Kind::exists_eventually)
        throw GenerationError("tests derive from exists-eventually queries only");
    ta::CheckResult result = ta::check(spec.network, query, spec.state_budget);
    if (result.verdict != ta::CheckResult::Verdict::satisfied)
        throw GenerationError("no test derivable: query not satisfiable: " + query.text);

    AbstractTest test;
    test.generator = Generator::mc;
    test.intent = query.text;
    int ta_ticks = 0;
    for (const auto& step : result.witness->steps) {
        if (step.kind == ta::Step::Kind::delay) {
            ++ta_ticks;
            continue;
        }
        const ta::Edge& edge = spec.network.automata[step.automaton].edges[step.edge];
        if (!edge.label.empty()) {
            auto it = spec.edge_map.find(edge.label);
            if (it != spec.edge_map.end())
                append_mapped(test.actions, it->second, ta_ticks * spec.ticks_per_ta_tick);
        }
        if (step.kind == ta::Step::Kind::sync) {
            const ta::Edge& recv =
                spec.network.automata[step.partner_automaton].edges[step.partner_edge];
            if (!recv.label.empty()) {
                auto it = spec.edge_map.find(recv.label);
                if (it != spec.edge_map.end())
                    append_mapped(test.actions, it->second, ta_ticks * spec.ticks_per_ta_tick);
            }
        }
    }
    sort_actions(test.actions);
    return test;
}

void ActionAlphabet::validate() const {
    std::set<std::pair<std::string, std::string>> names;
    for (const auto& e : entries) {
        if (e.label.empty()) throw GenerationError("alphabet entry with empty label");
        if (!names.emplace(actor_name(e.actor), e.name).second)
            throw GenerationError("duplicate alphabet entry '" + e.name + "'");
        if (e.min_gap < 0 || e.max_gap < e.min_gap)
            throw GenerationError("bad gap range for '" + e.name + "'");
        if (e.weight < 1) throw GenerationError("bad weight for '" + e.name + "'");
    }
}

AbstractTest random_generate(const ActionAlphabet& alphabet, std::uint64_t seed, int max_len) {
    if (max_len < 1) throw GenerationError("max_len must be >= 1");
    alphabet.validate();
    Rng rng(Rng::mix(seed, 0x7a2d));

    AbstractTest test;
    test.generator = Generator::random;
    int length = static_cast<int>(rng.below(static_cast<std::uint32_t>(max_len) + 1));
    int total_weight = 0;
    for (const auto& e : alphabet.entries) total_weight += e.weight;

    std::map<std::string, int> occurrences;
    int offset = 0;
    for (int i = 0; i < length; ++i) {
        // Weighted entry pick; entries at their occurrence cap are re-drawn.
        const AlphabetEntry* entry = nullptr;
        for (int tries = 0; tries < 16 && !entry; ++tries) {
            int roll = static_cast<int>(rng.below(static_cast<std::uint32_t>(total_weight)));
            for (const auto& e : alphabet.entries) {
                roll -= e.weight;
                if (roll < 0) {
                    if (occurrences[e.name] < e.max_occurrences) entry = &e;
                    break;
                }
            }
        }
        if (!entry) continue;
        ++occurrences[entry->name];
        offset = std::min(offset + rng.range(entry->min_gap, entry->max_gap),
                          alphabet.max_offset);
        Action a;
        a.offset = offset;
        a.actor = entry->actor;
        a.label = entry->label;
        a.params = entry->params;
        test.actions.push_back(std::move(a));
    }
    return test;
}

ConcreteTest concretize(const AbstractTest& abstract, std::uint64_t seed) {
    Rng rng(Rng::mix(seed, 0xc0c0));
    ConcreteTest test;
    test.id = abstract.id;
    test.generator = abstract.generator;
    test.seed = seed;
    test.intent = abstract.intent;
    test.actions = abstract.actions;
    for (auto& a : test.actions) {
        for (auto& p : a.params) {
            switch (p.kind) {
            case Param::Kind::int_value:
            case Param::Kind::word_value: break;
            case Param::Kind::int_range: {
                if (p.lo > p.hi)
                    throw GenerationError("empty range for param '" + p.name + "' of '" +
                                          a.label + "'");
                int v = rng.range(p.lo, p.hi);
                p = Param::fixed(p.name, v);
                break;
            }
            case Param::Kind::word_choice: {
                if (p.words.empty())
                    throw GenerationError("no choices for param '" + p.name + "' of '" +
                                          a.label + "'");
                std::string w = p.words[rng.below(static_cast<std::uint32_t>(p.words.size()))];
                p = Param::fixed_word(p.name, w);
                break;
            }
            }
        }
    }
    return test;
}

} // namespace hribench::gen
