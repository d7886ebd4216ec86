#include "hribench/ta/query.hpp"

#include <cctype>

namespace hribench::ta {

PredicatePtr Predicate::loc(int a, int l) {
    auto p = std::make_shared<Predicate>();
    p->kind = Kind::location;
    p->automaton = a;
    p->location = l;
    return p;
}

PredicatePtr Predicate::compare(Comparison c) {
    auto p = std::make_shared<Predicate>();
    p->kind = Kind::comparison;
    p->cmp = c;
    return p;
}

PredicatePtr Predicate::conj(PredicatePtr a, PredicatePtr b) {
    auto p = std::make_shared<Predicate>();
    p->kind = Kind::conjunction;
    p->lhs = std::move(a);
    p->rhs = std::move(b);
    return p;
}

PredicatePtr Predicate::disj(PredicatePtr a, PredicatePtr b) {
    auto p = std::make_shared<Predicate>();
    p->kind = Kind::disjunction;
    p->lhs = std::move(a);
    p->rhs = std::move(b);
    return p;
}

PredicatePtr Predicate::neg(PredicatePtr a) {
    auto p = std::make_shared<Predicate>();
    p->kind = Kind::negation;
    p->lhs = std::move(a);
    return p;
}

bool eval_predicate(const TaNetwork& net, const State& s, const Predicate& p) {
    switch (p.kind) {
    case Predicate::Kind::location: return s.locations[p.automaton] == p.location;
    case Predicate::Kind::comparison: {
        int lhs = p.cmp.kind == Comparison::Kind::clock ? s.clocks[p.cmp.index]
                                                        : s.variables[p.cmp.index];
        int rhs = p.cmp.rhs_is_var ? s.variables[p.cmp.rhs_index] : p.cmp.rhs;
        return compare(lhs, p.cmp.op, rhs);
    }
    case Predicate::Kind::conjunction:
        return eval_predicate(net, s, *p.lhs) && eval_predicate(net, s, *p.rhs);
    case Predicate::Kind::disjunction:
        return eval_predicate(net, s, *p.lhs) || eval_predicate(net, s, *p.rhs);
    case Predicate::Kind::negation: return !eval_predicate(net, s, *p.lhs);
    }
    return false;
}

namespace {

struct QueryCursor {
    const TaNetwork& net;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    bool consume(const std::string& token) {
        skip_ws();
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw QuerySyntaxError(pos, "expected identifier");
        return text.substr(start, pos - start);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1))
            throw QuerySyntaxError(pos, "expected integer");
        return std::stoi(text.substr(start, pos - start));
    }
};

PredicatePtr parse_or(QueryCursor& c);

PredicatePtr parse_atom(QueryCursor& c) {
    if (c.consume("(")) {
        auto p = parse_or(c);
        if (!c.consume(")")) throw QuerySyntaxError(c.pos, "expected ')'");
        return p;
    }
    if (c.consume("!")) return Predicate::neg(parse_atom(c));
    c.skip_ws();
    if (c.text.compare(c.pos, 4, "not ") == 0 || c.text.compare(c.pos, 4, "not(") == 0) {
        c.pos += 3;
        return Predicate::neg(parse_atom(c));
    }
    std::string name = c.identifier();
    c.skip_ws();
    if (c.consume(".")) {
        int a = c.net.automaton_index(name);
        return Predicate::loc(a, c.net.location_index(a, c.identifier()));
    }
    CmpOp op;
    if (c.consume("<=")) op = CmpOp::le;
    else if (c.consume(">=")) op = CmpOp::ge;
    else if (c.consume("==")) op = CmpOp::eq;
    else if (c.consume("!=")) op = CmpOp::ne;
    else if (c.consume("<")) op = CmpOp::lt;
    else if (c.consume(">")) op = CmpOp::gt;
    else throw QuerySyntaxError(c.pos, "expected comparison operator");

    Comparison cmp;
    cmp.op = op;
    cmp.rhs = c.integer();
    bool is_clock = false;
    for (const auto& clk : c.net.clocks) is_clock = is_clock || clk.name == name;
    if (is_clock) {
        cmp.kind = Comparison::Kind::clock;
        cmp.index = c.net.clock_index(name);
    } else {
        cmp.kind = Comparison::Kind::var;
        cmp.index = c.net.variable_index(name); // throws for undeclared names
    }
    return Predicate::compare(cmp);
}

PredicatePtr parse_and(QueryCursor& c) {
    auto lhs = parse_atom(c);
    while (c.consume("&&")) lhs = Predicate::conj(lhs, parse_atom(c));
    return lhs;
}

PredicatePtr parse_or(QueryCursor& c) {
    auto lhs = parse_and(c);
    while (c.consume("||")) lhs = Predicate::disj(lhs, parse_and(c));
    return lhs;
}

} // namespace

Query parse_query(const TaNetwork& net, const std::string& text) {
    QueryCursor c{net, text};
    Query q;
    q.text = text;
    if (c.consume("E<>")) q.kind = Query::Kind::exists_eventually;
    else if (c.consume("A[]")) q.kind = Query::Kind::always_globally;
    else throw QuerySyntaxError(c.pos, "expected 'E<>' or 'A[]'");
    if (c.eof()) throw QuerySyntaxError(c.pos, "empty predicate");
    q.predicate = parse_or(c);
    if (!c.eof()) throw QuerySyntaxError(c.pos, "trailing input");
    return q;
}

} // namespace hribench::ta
