#pragma once

#include "neutro/neutroset.hpp"

#include <nlohmann/json.hpp>

namespace neutro {

// JSON document layout:
//   {"universe": [names...],
//    "membership": {name: {"T": [[lo, hi], ...], "I": ..., "F": ...}}}
// where every endpoint is {"std": number, "coeff": number}. Doubles are
// written with round-trip precision, so decode(encode(x)) == x bit for bit.

[[nodiscard]] nlohmann::json to_json(const NonStdValue &v);
[[nodiscard]] nlohmann::json to_json(const IntervalUnion &s);
[[nodiscard]] nlohmann::json to_json(const NeutroTriple &x);
[[nodiscard]] nlohmann::json to_json(const NeutroSet &s);

// All decoders throw neutro::Error on schema violations. Triples are built
// in strict mode.
[[nodiscard]] NonStdValue value_from_json(const nlohmann::json &j);
[[nodiscard]] IntervalUnion component_from_json(const nlohmann::json &j);
[[nodiscard]] NeutroTriple triple_from_json(const nlohmann::json &j);
[[nodiscard]] NeutroSet set_from_json(const nlohmann::json &j);

} // namespace neutro
