#pragma once

#include "neutro/dsl/diagnostic.hpp"
#include "neutro/ndset.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace neutro::dsl {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NameRef {
    std::string name;
};

struct ComplementExpr {
    ExprPtr operand;
};

enum class BinaryOp { intersect, unite, difference, cartesian };

struct BinaryExpr {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<NameRef, ComplementExpr, BinaryExpr> node;
    Position pos;
};

struct Named {
    std::string name;
    Position pos;
};

// Components as written; range checks happen at evaluation time so that the
// evaluator can choose strict or clamping construction.
struct TripleLiteral {
    IntervalUnion truth;
    IntervalUnion indeterminacy;
    IntervalUnion falsity;
    Position pos;
};

struct UniverseDecl {
    Named name;
    std::vector<Named> elements;
};

struct SetEntry {
    Named element;
    TripleLiteral triple;
};

struct SetDecl {
    Named name;
    Named universe;
    std::vector<SetEntry> entries;
};

struct RelationEntry {
    std::vector<Named> tuple;
    Position pos;
    TripleLiteral triple;
};

struct RelationDecl {
    Named name;
    std::vector<Named> domains;
    std::vector<RelationEntry> entries;
};

struct EvalStmt {
    ExprPtr expr;
};

// "eval y in B" or "eval (a, b) in R".
struct MemberQuery {
    std::vector<Named> tuple;
    bool parenthesized = false;
    Named target;
};

struct CheckStmt {
    ExprPtr lhs;
    ExprPtr rhs;
};

struct ClassifyStmt {
    Named set;
    Named element;
};

struct Statement {
    std::variant<UniverseDecl, SetDecl, RelationDecl, EvalStmt, MemberQuery, CheckStmt,
                 ClassifyStmt>
        node;
    Position pos;
    std::string source; // statement text as written, trimmed
};

struct Script {
    std::vector<Statement> statements;
};

} // namespace neutro::dsl
