#pragma once

#include "neutro/dsl/ast.hpp"
#include "neutro/neutroset.hpp"
#include "neutro/taxonomy.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace neutro::dsl {

struct EvalOptions {
    // Strict: out-of-range literal endpoints are errors. Otherwise they are
    // clamped into [0^-, 1^+].
    bool strict_literals = true;
};

using Value = std::variant<bool, NeutroSet, CartesianProduct, NeutroTriple, Classification>;

struct Result {
    std::size_t line = 0;
    std::string statement; // source text of the statement
    std::string subject;   // "complement(A)", "A <= B", "B.y", "y in B"
    Value value;
};

// Declarations persist across execute() calls; names are immutable once
// declared. Operators map onto the set operations: & intersect, | unite,
// \ difference, complement(...), x cartesian, <= is_subset.
class Session {
public:
    explicit Session(EvalOptions options = {}) : options_(options) {}

    // Returns a result for eval/check/classify and nothing for declarations.
    // Throws DiagnosticError(Stage::evaluate); the session is left unchanged
    // by a failing statement.
    std::optional<Result> execute(const Statement &stmt);

    [[nodiscard]] bool declared(std::string_view name) const;

private:
    struct Universe {
        std::vector<std::string> elements;
    };
    using Binding = std::variant<Universe, NeutroSet, NeutroRelation>;

    void declare(const UniverseDecl &d);
    void declare(const SetDecl &d);
    void declare(const RelationDecl &d);
    Result query(const EvalStmt &s);
    Result query(const MemberQuery &s);
    Result query(const CheckStmt &s);
    Result query(const ClassifyStmt &s);

    Value eval(const Expr &e) const;
    const NeutroSet &as_set(const Expr &e, const Value &v, std::string_view role) const;
    const Binding &lookup(const Named &n) const;
    void require_fresh(const Named &n) const;
    NeutroTriple build(const TripleLiteral &lit) const;

    EvalOptions options_;
    std::map<std::string, Binding, std::less<>> bindings_;
};

// Runs a whole script; stops at the first evaluation error.
[[nodiscard]] std::vector<Result> evaluate(const Script &script, EvalOptions options = {});

} // namespace neutro::dsl
