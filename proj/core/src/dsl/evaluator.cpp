#include "neutro/dsl/evaluator.hpp"

#include "neutro/dsl/format.hpp"
#include "neutro/error.hpp"

#include <algorithm>
#include <set>

namespace neutro::dsl {

namespace {

[[noreturn]] void fail(Position at, std::string message) {
    throw DiagnosticError(Stage::evaluate, at, std::move(message));
}

std::string_view operator_text(BinaryOp op) {
    switch (op) {
    case BinaryOp::intersect: return "'&'";
    case BinaryOp::unite: return "'|'";
    case BinaryOp::difference: return "'\\'";
    case BinaryOp::cartesian: return "'x'";
    }
    return "operator";
}

SetOp set_op(BinaryOp op) {
    switch (op) {
    case BinaryOp::intersect: return SetOp::intersect;
    case BinaryOp::unite: return SetOp::unite;
    default: return SetOp::difference;
    }
}

std::string_view kind_of(const auto &binding) {
    return std::visit(
        [](const auto &b) -> std::string_view {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, NeutroSet>) return "set";
            else if constexpr (std::is_same_v<T, NeutroRelation>) return "relation";
            else return "universe";
        },
        binding);
}

} // namespace

bool Session::declared(std::string_view name) const { return bindings_.contains(name); }

std::optional<Result> Session::execute(const Statement &stmt) {
    return std::visit(
        [&](const auto &node) -> std::optional<Result> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, UniverseDecl> || std::is_same_v<T, SetDecl> ||
                          std::is_same_v<T, RelationDecl>) {
                declare(node);
                return std::nullopt;
            } else {
                Result r = query(node);
                r.line = stmt.pos.line;
                r.statement = stmt.source;
                return r;
            }
        },
        stmt.node);
}

void Session::require_fresh(const Named &n) const {
    if (declared(n.name)) fail(n.pos, "'" + n.name + "' is already declared");
}

const Session::Binding &Session::lookup(const Named &n) const {
    auto it = bindings_.find(n.name);
    if (it == bindings_.end()) fail(n.pos, "undeclared name '" + n.name + "'");
    return it->second;
}

NeutroTriple Session::build(const TripleLiteral &lit) const {
    if (!options_.strict_literals) {
        return NeutroTriple::clamped(lit.truth, lit.indeterminacy, lit.falsity);
    }
    try {
        return NeutroTriple::strict(lit.truth, lit.indeterminacy, lit.falsity);
    } catch (const Error &e) {
        fail(lit.pos, e.what());
    }
}

void Session::declare(const UniverseDecl &d) {
    require_fresh(d.name);
    Universe u;
    std::set<std::string_view> seen;
    for (const auto &e : d.elements) {
        if (!seen.insert(e.name).second) fail(e.pos, "duplicate element '" + e.name + "'");
        u.elements.push_back(e.name);
    }
    bindings_.emplace(d.name.name, std::move(u));
}

void Session::declare(const SetDecl &d) {
    require_fresh(d.name);
    const auto *universe = std::get_if<Universe>(&lookup(d.universe));
    if (universe == nullptr) fail(d.universe.pos, "'" + d.universe.name + "' is not a universe");

    NeutroSet::Membership records;
    for (const auto &entry : d.entries) {
        const auto &elems = universe->elements;
        if (std::find(elems.begin(), elems.end(), entry.element.name) == elems.end()) {
            fail(entry.element.pos, "element '" + entry.element.name + "' is not in universe '" +
                                        d.universe.name + "'");
        }
        if (!records.emplace(entry.element.name, build(entry.triple)).second) {
            fail(entry.element.pos, "element '" + entry.element.name + "' is listed twice");
        }
    }
    bindings_.emplace(d.name.name, NeutroSet(universe->elements, std::move(records)));
}

void Session::declare(const RelationDecl &d) {
    require_fresh(d.name);
    std::vector<std::vector<std::string>> domains;
    for (const auto &dom : d.domains) {
        const auto *universe = std::get_if<Universe>(&lookup(dom));
        if (universe == nullptr) fail(dom.pos, "'" + dom.name + "' is not a universe");
        domains.push_back(universe->elements);
    }
    NeutroRelation::Tuples tuples;
    for (const auto &entry : d.entries) {
        if (entry.tuple.size() != domains.size()) fail(entry.pos, "tuple outside relation signature");
        NeutroRelation::Tuple tuple;
        for (std::size_t k = 0; k < entry.tuple.size(); ++k) {
            const auto &dom = domains[k];
            const auto &e = entry.tuple[k];
            if (std::find(dom.begin(), dom.end(), e.name) == dom.end()) {
                fail(e.pos, "tuple outside relation signature");
            }
            tuple.push_back(e.name);
        }
        if (!tuples.emplace(std::move(tuple), build(entry.triple)).second) {
            fail(entry.pos, "tuple is listed twice");
        }
    }
    bindings_.emplace(d.name.name, NeutroRelation(std::move(domains), std::move(tuples)));
}

const NeutroSet &Session::as_set(const Expr &e, const Value &v, std::string_view role) const {
    if (const auto *s = std::get_if<NeutroSet>(&v)) return *s;
    fail(e.pos, "a Cartesian product cannot be used as " + std::string(role));
}

Value Session::eval(const Expr &e) const {
    return std::visit(
        [&](const auto &node) -> Value {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NameRef>) {
                const auto &b = lookup(Named{node.name, e.pos});
                if (const auto *s = std::get_if<NeutroSet>(&b)) return *s;
                fail(e.pos, "'" + node.name + "' is a " + std::string(kind_of(b)) + ", not a set");
            } else if constexpr (std::is_same_v<T, ComplementExpr>) {
                const auto v = eval(*node.operand);
                return set_apply(SetOp::complement, as_set(*node.operand, v, "the operand of complement"));
            } else {
                const auto lhs = eval(*node.lhs);
                const auto rhs = eval(*node.rhs);
                const std::string role = "an operand of " + std::string(operator_text(node.op));
                const auto &a = as_set(*node.lhs, lhs, role);
                const auto &b = as_set(*node.rhs, rhs, role);
                if (node.op == BinaryOp::cartesian) return cartesian(a, b);
                if (a.universe() != b.universe()) fail(e.pos, "universe mismatch");
                return set_apply(set_op(node.op), a, b);
            }
        },
        e.node);
}

Result Session::query(const EvalStmt &s) {
    Result r;
    r.subject = format(*s.expr);
    r.value = eval(*s.expr);
    return r;
}

Result Session::query(const MemberQuery &s) {
    const auto &binding = lookup(s.target);
    std::string tuple_text;
    for (std::size_t k = 0; k < s.tuple.size(); ++k) {
        if (k) tuple_text += ", ";
        tuple_text += s.tuple[k].name;
    }
    if (s.parenthesized) tuple_text = "(" + tuple_text + ")";

    Result r;
    r.subject = tuple_text + " in " + s.target.name;
    if (const auto *set = std::get_if<NeutroSet>(&binding)) {
        if (s.tuple.size() != 1) fail(s.tuple.front().pos, "a set is queried with a single element");
        if (!set->in_universe(s.tuple.front().name)) {
            fail(s.tuple.front().pos, "element '" + s.tuple.front().name + "' is not in the universe of '" +
                                          s.target.name + "'");
        }
        r.value = set->at(s.tuple.front().name);
        return r;
    }
    if (const auto *rel = std::get_if<NeutroRelation>(&binding)) {
        NeutroRelation::Tuple tuple;
        for (const auto &n : s.tuple) tuple.push_back(n.name);
        if (!rel->fits(tuple)) fail(s.tuple.front().pos, "tuple outside relation signature");
        r.value = rel->get(tuple);
        return r;
    }
    fail(s.target.pos, "'" + s.target.name + "' is a universe, not a set or relation");
}

Result Session::query(const CheckStmt &s) {
    const auto lhs = eval(*s.lhs);
    const auto rhs = eval(*s.rhs);
    const auto &a = as_set(*s.lhs, lhs, "an operand of '<='");
    const auto &b = as_set(*s.rhs, rhs, "an operand of '<='");
    if (a.universe() != b.universe()) fail(s.lhs->pos, "universe mismatch");
    Result r;
    r.subject = format(*s.lhs) + " <= " + format(*s.rhs);
    r.value = is_subset(a, b);
    return r;
}

Result Session::query(const ClassifyStmt &s) {
    const auto &binding = lookup(s.set);
    const auto *set = std::get_if<NeutroSet>(&binding);
    if (set == nullptr) {
        fail(s.set.pos, "'" + s.set.name + "' is a " + std::string(kind_of(binding)) + ", not a set");
    }
    if (!set->in_universe(s.element.name)) {
        fail(s.element.pos, "element '" + s.element.name + "' is not in the universe of '" + s.set.name + "'");
    }
    Result r;
    r.subject = s.set.name + "." + s.element.name;
    r.value = classify_triple(set->at(s.element.name));
    return r;
}

std::vector<Result> evaluate(const Script &script, EvalOptions options) {
    Session session(options);
    std::vector<Result> out;
    for (const auto &stmt : script.statements) {
        if (auto r = session.execute(stmt)) out.push_back(std::move(*r));
    }
    return out;
}

} // namespace neutro::dsl
