#pragma once

#include "neutro/ndset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace neutro {

// An element's appurtenance record: truth (T), indeterminacy (I) and
// falsity (F) component subsets, each within [0^-, 1^+].
class NeutroTriple {
public:
    // Rejects any endpoint outside [0^-, 1^+].
    static NeutroTriple strict(IntervalUnion truth, IntervalUnion indeterminacy,
                               IntervalUnion falsity);
    // Clamps every component into [0^-, 1^+].
    static NeutroTriple clamped(const IntervalUnion &truth,
                                const IntervalUnion &indeterminacy,
                                const IntervalUnion &falsity);
    // Strict triple of singletons.
    static NeutroTriple point(NonStdValue t, NonStdValue i, NonStdValue f);

    // ({0}, {0}, {1}): definitely not a member. Used for unmapped elements.
    static const NeutroTriple &absent();

    [[nodiscard]] const IntervalUnion &truth() const noexcept { return truth_; }
    [[nodiscard]] const IntervalUnion &indeterminacy() const noexcept { return indeterminacy_; }
    [[nodiscard]] const IntervalUnion &falsity() const noexcept { return falsity_; }

    [[nodiscard]] bool is_point() const noexcept {
        return truth_.is_singleton() && indeterminacy_.is_singleton() &&
               falsity_.is_singleton();
    }

    friend bool operator==(const NeutroTriple &, const NeutroTriple &) = default;

private:
    NeutroTriple(IntervalUnion t, IntervalUnion i, IntervalUnion f)
        : truth_(std::move(t)), indeterminacy_(std::move(i)), falsity_(std::move(f)) {}

    IntervalUnion truth_;
    IntervalUnion indeterminacy_;
    IntervalUnion falsity_;
};

[[nodiscard]] bool approx_equal(const NeutroTriple &a, const NeutroTriple &b,
                                double tol = 1e-12) noexcept;

// n_inf = inf T + inf I + inf F, n_sup = sup T + sup I + sup F.
struct TripleBounds {
    NonStdValue n_inf;
    NonStdValue n_sup;
};
[[nodiscard]] TripleBounds n_bounds(const NeutroTriple &x);

// Per-element operations. Each formula is evaluated compositionally with
// Minkowski arithmetic; only the final component is clamped.
[[nodiscard]] NeutroTriple complement(const NeutroTriple &x);    // {1^+} - C
[[nodiscard]] NeutroTriple intersect(const NeutroTriple &x, const NeutroTriple &y);  // C1 * C2
[[nodiscard]] NeutroTriple unite(const NeutroTriple &x, const NeutroTriple &y);      // C1 + C2 - C1 * C2
[[nodiscard]] NeutroTriple difference(const NeutroTriple &x, const NeutroTriple &y); // C1 - C1 * C2

// inf T1 <= inf T2, sup T1 <= sup T2, inf F1 >= inf F2, sup F1 >= sup F2.
// I is not constrained.
[[nodiscard]] bool is_subset(const NeutroTriple &x, const NeutroTriple &y);

struct Element {
    std::string name;
    NeutroTriple triple;

    friend bool operator==(const Element &, const Element &) = default;
};

// Cartesian pairing keeps both records untouched.
struct ElementPair {
    Element first;
    Element second;

    friend bool operator==(const ElementPair &, const ElementPair &) = default;
};
[[nodiscard]] ElementPair cartesian(const Element &x, const Element &y);

// A neutrosophic set over an ordered universe of element names. Elements
// without an explicit record take NeutroTriple::absent().
class NeutroSet {
public:
    using Membership = std::map<std::string, NeutroTriple, std::less<>>;

    // Throws neutro::Error on duplicate universe names or mapped names that
    // are not in the universe.
    NeutroSet(std::vector<std::string> universe, Membership membership);

    [[nodiscard]] const std::vector<std::string> &universe() const noexcept { return universe_; }
    [[nodiscard]] const Membership &membership() const noexcept { return membership_; }

    [[nodiscard]] bool in_universe(std::string_view name) const;
    // Stored record or the absent default. Throws if name is not in the universe.
    [[nodiscard]] const NeutroTriple &at(std::string_view name) const;

    friend bool operator==(const NeutroSet &, const NeutroSet &) = default;

private:
    std::vector<std::string> universe_;
    Membership membership_;
};

enum class SetOp { complement, intersect, unite, difference };

// Lifts a per-element operation to whole sets; the result maps every
// universe element explicitly. Binary operations require identical universes
// and throw neutro::Error("universe mismatch") otherwise.
[[nodiscard]] NeutroSet set_apply(SetOp op, const NeutroSet &a);
[[nodiscard]] NeutroSet set_apply(SetOp op, const NeutroSet &a, const NeutroSet &b);

// Element-wise is_subset over a shared universe.
[[nodiscard]] bool is_subset(const NeutroSet &a, const NeutroSet &b);

struct CartesianProduct {
    std::vector<ElementPair> pairs; // row-major over the two universes

    friend bool operator==(const CartesianProduct &, const CartesianProduct &) = default;
};
[[nodiscard]] CartesianProduct cartesian(const NeutroSet &a, const NeutroSet &b);

// Neutrosophic n-ary relation: each stored tuple carries a validity (T),
// indeterminacy (I) and non-validity (F) record.
class NeutroRelation {
public:
    using Tuple = std::vector<std::string>;
    using Tuples = std::map<Tuple, NeutroTriple>;

    // Throws neutro::Error when there are no domains, a domain is empty, or
    // a stored tuple does not fit the signature.
    NeutroRelation(std::vector<std::vector<std::string>> domains, Tuples tuples);

    [[nodiscard]] std::size_t arity() const noexcept { return domains_.size(); }
    [[nodiscard]] const std::vector<std::vector<std::string>> &domains() const noexcept {
        return domains_;
    }
    [[nodiscard]] const Tuples &tuples() const noexcept { return tuples_; }

    [[nodiscard]] bool fits(const Tuple &tuple) const;
    // Throws neutro::Error("tuple outside relation signature").
    [[nodiscard]] const NeutroTriple &get(const Tuple &tuple) const;

private:
    std::vector<std::vector<std::string>> domains_;
    Tuples tuples_;
};

} // namespace neutro
