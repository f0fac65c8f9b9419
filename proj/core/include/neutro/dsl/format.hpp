#pragma once

#include "neutro/dsl/ast.hpp"
#include "neutro/neutroset.hpp"
#include "neutro/taxonomy.hpp"

#include <string>

namespace neutro::dsl {

// Canonical text forms. Everything produced here parses back (through the
// matching parse_* entry point) to an identical value.

// "0.5" | "{0.2,0.24,0.28}" | "[0.4,0.45]|[0.5,0.51]" | "0.1|[0.3,0.4]"
[[nodiscard]] std::string format(const IntervalUnion &s);
// "(0.5, 0.2, 0.3)"
[[nodiscard]] std::string format(const NeutroTriple &x);
// "{x: (0.5, 0.2, 0.3), y: (0, 0, 1)}", universe order, every element listed.
[[nodiscard]] std::string format(const NeutroSet &s);
[[nodiscard]] std::string format(const Classification &c);
[[nodiscard]] std::string format(bool b);
// Fully parenthesized only where precedence requires it.
[[nodiscard]] std::string format(const Expr &e);

} // namespace neutro::dsl
