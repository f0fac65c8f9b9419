#include "neutro/neutroset.hpp"

#include "neutro/error.hpp"

#include <algorithm>
#include <set>

namespace neutro {

namespace {

bool within_unit(const IntervalUnion &c) {
    return NonStdValue::zero_minus() <= c.inf() && c.sup() <= NonStdValue::one_plus();
}

const IntervalUnion &one_plus_set() {
    static const IntervalUnion s{NonStdValue::one_plus()};
    return s;
}

template <typename ComponentOp>
NeutroTriple componentwise(const NeutroTriple &x, const NeutroTriple &y, ComponentOp op) {
    return NeutroTriple::clamped(op(x.truth(), y.truth()),
                                 op(x.indeterminacy(), y.indeterminacy()),
                                 op(x.falsity(), y.falsity()));
}

} // namespace

NeutroTriple NeutroTriple::strict(IntervalUnion truth, IntervalUnion indeterminacy,
                                  IntervalUnion falsity) {
    if (!within_unit(truth) || !within_unit(indeterminacy) || !within_unit(falsity)) {
        throw Error("component endpoint outside [0^-, 1^+]");
    }
    return {std::move(truth), std::move(indeterminacy), std::move(falsity)};
}

NeutroTriple NeutroTriple::clamped(const IntervalUnion &truth,
                                   const IntervalUnion &indeterminacy,
                                   const IntervalUnion &falsity) {
    return {clamp_unit(truth), clamp_unit(indeterminacy), clamp_unit(falsity)};
}

NeutroTriple NeutroTriple::point(NonStdValue t, NonStdValue i, NonStdValue f) {
    return strict(IntervalUnion{t}, IntervalUnion{i}, IntervalUnion{f});
}

const NeutroTriple &NeutroTriple::absent() {
    static const NeutroTriple value = point(0.0, 0.0, 1.0);
    return value;
}

bool approx_equal(const NeutroTriple &a, const NeutroTriple &b, double tol) noexcept {
    return approx_equal(a.truth(), b.truth(), tol) &&
           approx_equal(a.indeterminacy(), b.indeterminacy(), tol) &&
           approx_equal(a.falsity(), b.falsity(), tol);
}

TripleBounds n_bounds(const NeutroTriple &x) {
    return {x.truth().inf() + x.indeterminacy().inf() + x.falsity().inf(),
            x.truth().sup() + x.indeterminacy().sup() + x.falsity().sup()};
}

NeutroTriple complement(const NeutroTriple &x) {
    const auto &one = one_plus_set();
    return NeutroTriple::clamped(one - x.truth(), one - x.indeterminacy(),
                                 one - x.falsity());
}

NeutroTriple intersect(const NeutroTriple &x, const NeutroTriple &y) {
    return componentwise(x, y, [](const IntervalUnion &a, const IntervalUnion &b) {
        return a * b;
    });
}

NeutroTriple unite(const NeutroTriple &x, const NeutroTriple &y) {
    return componentwise(x, y, [](const IntervalUnion &a, const IntervalUnion &b) {
        return (a + b) - (a * b);
    });
}

NeutroTriple difference(const NeutroTriple &x, const NeutroTriple &y) {
    return componentwise(x, y, [](const IntervalUnion &a, const IntervalUnion &b) {
        return a - (a * b);
    });
}

bool is_subset(const NeutroTriple &x, const NeutroTriple &y) {
    return x.truth().inf() <= y.truth().inf() && x.truth().sup() <= y.truth().sup() &&
           x.falsity().inf() >= y.falsity().inf() && x.falsity().sup() >= y.falsity().sup();
}

ElementPair cartesian(const Element &x, const Element &y) { return {x, y}; }

NeutroSet::NeutroSet(std::vector<std::string> universe, Membership membership)
    : universe_(std::move(universe)), membership_(std::move(membership)) {
    std::set<std::string_view> seen;
    for (const auto &name : universe_) {
        if (!seen.insert(name).second) {
            throw Error("duplicate universe element '" + name + "'");
        }
    }
    for (const auto &[name, triple] : membership_) {
        if (!seen.contains(name)) {
            throw Error("element '" + name + "' is not in the universe");
        }
    }
}

bool NeutroSet::in_universe(std::string_view name) const {
    return std::find(universe_.begin(), universe_.end(), name) != universe_.end();
}

const NeutroTriple &NeutroSet::at(std::string_view name) const {
    if (auto it = membership_.find(name); it != membership_.end()) return it->second;
    if (!in_universe(name)) {
        throw Error("element '" + std::string(name) + "' is not in the universe");
    }
    return NeutroTriple::absent();
}

namespace {

NeutroTriple apply_one(SetOp op, const NeutroTriple &x, const NeutroTriple &y) {
    switch (op) {
    case SetOp::complement: return complement(x);
    case SetOp::intersect: return intersect(x, y);
    case SetOp::unite: return unite(x, y);
    case SetOp::difference: return difference(x, y);
    }
    throw Error("unknown set operation");
}

void require_same_universe(const NeutroSet &a, const NeutroSet &b) {
    if (a.universe() != b.universe()) throw Error("universe mismatch");
}

} // namespace

NeutroSet set_apply(SetOp op, const NeutroSet &a) {
    if (op != SetOp::complement) throw Error("binary set operation needs two operands");
    NeutroSet::Membership out;
    for (const auto &name : a.universe()) out.emplace(name, complement(a.at(name)));
    return {a.universe(), std::move(out)};
}

NeutroSet set_apply(SetOp op, const NeutroSet &a, const NeutroSet &b) {
    if (op == SetOp::complement) return set_apply(op, a);
    require_same_universe(a, b);
    NeutroSet::Membership out;
    for (const auto &name : a.universe()) {
        out.emplace(name, apply_one(op, a.at(name), b.at(name)));
    }
    return {a.universe(), std::move(out)};
}

bool is_subset(const NeutroSet &a, const NeutroSet &b) {
    require_same_universe(a, b);
    return std::all_of(a.universe().begin(), a.universe().end(), [&](const std::string &name) {
        return is_subset(a.at(name), b.at(name));
    });
}

CartesianProduct cartesian(const NeutroSet &a, const NeutroSet &b) {
    CartesianProduct out;
    out.pairs.reserve(a.universe().size() * b.universe().size());
    for (const auto &x : a.universe()) {
        for (const auto &y : b.universe()) {
            out.pairs.push_back(cartesian(Element{x, a.at(x)}, Element{y, b.at(y)}));
        }
    }
    return out;
}

NeutroRelation::NeutroRelation(std::vector<std::vector<std::string>> domains, Tuples tuples)
    : domains_(std::move(domains)), tuples_(std::move(tuples)) {
    if (domains_.empty()) throw Error("relation needs at least one domain");
    for (const auto &d : domains_) {
        if (d.empty()) throw Error("relation domain is empty");
    }
    for (const auto &[tuple, triple] : tuples_) {
        if (!fits(tuple)) throw Error("tuple outside relation signature");
    }
}

bool NeutroRelation::fits(const Tuple &tuple) const {
    if (tuple.size() != domains_.size()) return false;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        const auto &d = domains_[k];
        if (std::find(d.begin(), d.end(), tuple[k]) == d.end()) return false;
    }
    return true;
}

const NeutroTriple &NeutroRelation::get(const Tuple &tuple) const {
    if (!fits(tuple)) throw Error("tuple outside relation signature");
    if (auto it = tuples_.find(tuple); it != tuples_.end()) return it->second;
    return NeutroTriple::absent();
}

} // namespace neutro
