#pragma once

#include "neutro/dsl/ast.hpp"
#include "neutro/dsl/lexer.hpp"

#include <span>
#include <string_view>

namespace neutro::dsl {

// Recursive-descent parser for the statement grammar:
//
//   script    := (stmt NEWLINE)* stmt?
//   stmt      := "universe" NAME "=" "{" NAME ("," NAME)* "}"
//              | "set" NAME "over" NAME "{" (NAME ":" triple ("," NAME ":" triple)*)? "}"
//              | "relation" NAME "over" NAME ("," NAME)* "{" (tuple ":" triple ("," ...)*)? "}"
//              | "eval" expr
//              | "eval" (NAME | tuple) "in" NAME
//              | "check" expr "<=" expr
//              | "classify" NAME "." NAME
//   tuple     := "(" NAME ("," NAME)* ")"
//   triple    := "(" component "," component "," component ")"
//   component := interval ("|" interval)* | "{" num ("," num)* "}"
//   interval  := "[" num "," num "]" | num
//   expr      := term (("|" | "\") term)*
//   term      := factor ("&" factor)*
//   factor    := primary ("x" primary)*
//   primary   := NAME | "complement" "(" expr ")" | "(" expr ")"
//
// "|" separates interval parts inside a component and means set union in
// expression position. The Cartesian operator "x" is an ordinary name token
// recognized only in infix position.
//
// Throws DiagnosticError(Stage::parse) at the first syntax error.
[[nodiscard]] Script parse(std::span<const Token> tokens, std::string_view source);

// tokenize + parse.
[[nodiscard]] Script parse_source(std::string_view source);

// Parses a lone component literal such as "[0.4,0.45]|[0.5,0.51]" or
// "{0.2,0.24}".
[[nodiscard]] IntervalUnion parse_component(std::string_view text);

// Parses a lone triple literal such as "(0.5, 0.2, 0.3)".
[[nodiscard]] TripleLiteral parse_triple(std::string_view text);

} // namespace neutro::dsl
