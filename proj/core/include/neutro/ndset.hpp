#pragma once

#include "neutro/hyperreal.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace neutro {

// Closed interval [lo, hi]; lo == hi is a singleton.
struct Interval {
    NonStdValue lo;
    NonStdValue hi;

    [[nodiscard]] bool is_point() const noexcept { return lo == hi; }
    [[nodiscard]] bool contains(const NonStdValue &v) const noexcept {
        return lo <= v && v <= hi;
    }

    friend bool operator==(const Interval &, const Interval &) = default;
};

struct Bounds {
    NonStdValue inf;
    NonStdValue sup;
};

// A non-empty finite union of closed intervals, kept sorted, disjoint and
// non-touching. Each neutrosophic component (T, I or F) is one of these.
class IntervalUnion {
public:
    // Sorts and merges overlapping or touching parts.
    // Throws neutro::Error("empty component") or ("inverted interval").
    static IntervalUnion canonicalize(std::vector<Interval> raw);

    IntervalUnion(NonStdValue point); // NOLINT(google-explicit-constructor)
    IntervalUnion(NonStdValue lo, NonStdValue hi);

    [[nodiscard]] std::span<const Interval> parts() const noexcept { return parts_; }
    [[nodiscard]] const NonStdValue &inf() const noexcept { return parts_.front().lo; }
    [[nodiscard]] const NonStdValue &sup() const noexcept { return parts_.back().hi; }
    [[nodiscard]] Bounds bounds() const { return {inf(), sup()}; }

    [[nodiscard]] bool contains(const NonStdValue &v) const noexcept;
    // Exactly one point.
    [[nodiscard]] bool is_singleton() const noexcept {
        return parts_.size() == 1 && parts_.front().is_point();
    }
    // Every part is a point, e.g. {0.20, 0.24, 0.28}.
    [[nodiscard]] bool all_points() const noexcept;

    friend bool operator==(const IntervalUnion &, const IntervalUnion &) = default;

private:
    explicit IntervalUnion(std::vector<Interval> canonical) : parts_(std::move(canonical)) {}

    std::vector<Interval> parts_;
};

// Minkowski operations, evaluated part-pair by part-pair then canonicalized.
// None of them clamp; see clamp_unit().
[[nodiscard]] IntervalUnion operator+(const IntervalUnion &a, const IntervalUnion &b);
[[nodiscard]] IntervalUnion operator-(const IntervalUnion &a, const IntervalUnion &b);
[[nodiscard]] IntervalUnion operator*(const IntervalUnion &a, const IntervalUnion &b);

// Throws neutro::Error("division by zero scalar") when k == 0.
[[nodiscard]] IntervalUnion div_scalar(const IntervalUnion &s, double k);

// Passes every endpoint through clamp_unit(NonStdValue); parts that fall
// entirely outside collapse to {0^-} or {1^+}.
[[nodiscard]] IntervalUnion clamp_unit(const IntervalUnion &s);

[[nodiscard]] bool approx_equal(const IntervalUnion &a, const IntervalUnion &b,
                                double tol = 1e-12) noexcept;

} // namespace neutro
