#include "neutro/serialize.hpp"

#include "neutro/error.hpp"

namespace neutro {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *key) {
    if (!j.is_object()) throw Error(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
    return *it;
}

double number(const json &j, const char *what) {
    if (!j.is_number()) throw Error(std::string("'") + what + "' must be a number");
    return j.get<double>();
}

} // namespace

json to_json(const NonStdValue &v) {
    return json{{"std", v.standard()}, {"coeff", v.coeff()}};
}

json to_json(const IntervalUnion &s) {
    json parts = json::array();
    for (const auto &p : s.parts()) parts.push_back(json::array({to_json(p.lo), to_json(p.hi)}));
    return parts;
}

json to_json(const NeutroTriple &x) {
    return json{{"T", to_json(x.truth())},
                {"I", to_json(x.indeterminacy())},
                {"F", to_json(x.falsity())}};
}

json to_json(const NeutroSet &s) {
    json membership = json::object();
    for (const auto &[name, triple] : s.membership()) membership[name] = to_json(triple);
    return json{{"universe", s.universe()}, {"membership", std::move(membership)}};
}

NonStdValue value_from_json(const json &j) {
    return {number(field(j, "std"), "std"), number(field(j, "coeff"), "coeff")};
}

IntervalUnion component_from_json(const json &j) {
    if (!j.is_array()) throw Error("component must be an array of [lo, hi] pairs");
    std::vector<Interval> raw;
    raw.reserve(j.size());
    for (const auto &part : j) {
        if (!part.is_array() || part.size() != 2) {
            throw Error("component part must be a [lo, hi] pair");
        }
        raw.push_back({value_from_json(part[0]), value_from_json(part[1])});
    }
    return IntervalUnion::canonicalize(std::move(raw));
}

NeutroTriple triple_from_json(const json &j) {
    return NeutroTriple::strict(component_from_json(field(j, "T")),
                                component_from_json(field(j, "I")),
                                component_from_json(field(j, "F")));
}

NeutroSet set_from_json(const json &j) {
    const auto &universe = field(j, "universe");
    if (!universe.is_array()) throw Error("'universe' must be an array of names");
    std::vector<std::string> names;
    for (const auto &n : universe) {
        if (!n.is_string()) throw Error("universe names must be strings");
        names.push_back(n.get<std::string>());
    }
    const auto &membership = field(j, "membership");
    if (!membership.is_object()) throw Error("'membership' must be an object");
    NeutroSet::Membership records;
    for (const auto &[name, triple] : membership.items()) {
        records.emplace(name, triple_from_json(triple));
    }
    return {std::move(names), std::move(records)};
}

} // namespace neutro
