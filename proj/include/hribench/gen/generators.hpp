#pragma once

#include "hribench/bdi/interpreter.hpp"
#include "hribench/gen/test_ir.hpp"
#include "hribench/ta/checker.hpp"

namespace hribench::gen {

class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// How one emitted model action (a BDI plan emission or a labelled TA edge)
/// becomes a timed test action. Unmapped emissions are dropped; that is how
/// the robot's own contribution stays out of the stimulus.
struct ActionTemplate {
    Actor actor = Actor::human;
    std::string label;
    std::vector<Param> params; ///< fixed classes plus symbolic ranges
    int tick_delta = 0;        ///< shifts the action relative to its model time
};

// ---------------------------------------------------------------------------
// Agent-based generation
// ---------------------------------------------------------------------------

struct BdiModelSpec {
    bdi::SystemModel model;
    std::map<std::string, ActionTemplate> action_map; ///< emission name -> template
    int ticks_per_cycle = 10;
    int max_cycles = bdi::kDefaultMaxCycles;
};

/// Runs the multi-agent system once with the injected beliefs and extracts
/// the environment actions of the recorded trace as a timed sequence.
AbstractTest bdi_generate(const BdiModelSpec& spec, const bdi::BeliefSet& beliefs);

/// Constraint over belief sets: all of `required` (in order), none of
/// `forbidden`, plus a seeded sub-selection of `optional_pool`.
struct SetConstraint {
    std::vector<bdi::Belief> required;
    std::vector<bdi::Belief> forbidden;
    std::vector<bdi::Belief> optional_pool;
    int optional_percent = 50; ///< chance each pool entry joins the set
};

struct VocabularySpec {
    std::vector<bdi::Belief> entries; ///< the full controllable vocabulary
    bool contains(const bdi::Belief& b) const;
};

/// Deterministic seeded sampling of `count` distinct belief sets satisfying
/// the constraint. Throws GenerationError when the constraint cannot be met
/// within the vocabulary or not enough distinct sets exist.
std::vector<bdi::BeliefSet> enumerate_belief_sets(const VocabularySpec& vocab,
                                                  const SetConstraint& constraint, int count,
                                                  std::uint64_t seed);

// ---------------------------------------------------------------------------
// Model-checking-based generation
// ---------------------------------------------------------------------------

struct McModelSpec {
    ta::TaNetwork network;
    std::map<std::string, ActionTemplate> edge_map; ///< edge label -> template
    int ticks_per_ta_tick = 10;
    std::size_t state_budget = ta::kDefaultStateBudget;
};

/// Checks the (exists-eventually) query and projects the witness onto the
/// environment: labelled, mapped edges become timed actions; delays set the
/// timeline; everything else is dropped.
AbstractTest mc_generate(const McModelSpec& spec, const ta::Query& query);

// ---------------------------------------------------------------------------
// Pseudorandom generation
// ---------------------------------------------------------------------------

struct AlphabetEntry {
    std::string name; ///< unique per actor (label plus variant)
    Actor actor = Actor::human;
    std::string label;
    std::vector<Param> params;
    int min_gap = 1;
    int max_gap = 50;
    int weight = 1;
    int max_occurrences = 1 << 30;
};

struct ActionAlphabet {
    std::vector<AlphabetEntry> entries;
    int max_offset = 1 << 30; ///< later draws clamp here

    void validate() const; ///< unique names per actor, positive gaps/weights
};

/// Seeded draw of a sequence length in [0, max_len], then independent draws
/// of entries and inter-action gaps.
AbstractTest random_generate(const ActionAlphabet& alphabet, std::uint64_t seed, int max_len);

// ---------------------------------------------------------------------------
// Concretization
// ---------------------------------------------------------------------------

/// Instantiates every symbolic parameter by a seeded uniform draw within its
/// declared range. Classification-relevant classes are fixed words in the
/// abstract test, so instantiation cannot change them.
ConcreteTest concretize(const AbstractTest& abstract, std::uint64_t seed);

} // namespace hribench::gen
