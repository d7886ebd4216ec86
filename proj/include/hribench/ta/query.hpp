#pragma once

#include "hribench/ta/network.hpp"

#include <memory>

namespace hribench::ta {

class QuerySyntaxError : public std::runtime_error {
public:
    QuerySyntaxError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

struct Predicate;
using PredicatePtr = std::shared_ptr<const Predicate>;

/// Boolean expression over automaton locations, variable comparisons and
/// clock comparisons.
struct Predicate {
    enum class Kind { location, comparison, conjunction, disjunction, negation };
    Kind kind = Kind::location;
    int automaton = 0; // location
    int location = 0;
    Comparison cmp;            // comparison
    PredicatePtr lhs, rhs;     // conjunction/disjunction; negation uses lhs

    static PredicatePtr loc(int a, int l);
    static PredicatePtr compare(Comparison c);
    static PredicatePtr conj(PredicatePtr a, PredicatePtr b);
    static PredicatePtr disj(PredicatePtr a, PredicatePtr b);
    static PredicatePtr neg(PredicatePtr a);
};

bool eval_predicate(const TaNetwork& net, const State& s, const Predicate& p);

struct Query {
    enum class Kind { exists_eventually, always_globally };
    Kind kind = Kind::exists_eventually;
    PredicatePtr predicate;
    std::string text; ///< source form, kept for reports
};

/// Parses `E<> <pred>` or `A[] <pred>`. Predicates combine `agent.location`
/// tests, `var <op> int` and `clock <op> int` comparisons with `&&`, `||`,
/// `!`/`not` and parentheses. Throws QuerySyntaxError with a position, or
/// std::invalid_argument for undeclared identifiers.
Query parse_query(const TaNetwork& net, const std::string& text);

} // namespace hribench::ta
