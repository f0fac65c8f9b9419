#include "neutro/ndset.hpp"

#include "neutro/error.hpp"

#include <algorithm>
#include <array>

namespace neutro {

IntervalUnion IntervalUnion::canonicalize(std::vector<Interval> raw) {
    if (raw.empty()) throw Error("empty component");
    for (const auto &part : raw) {
        if (part.hi < part.lo) throw Error("inverted interval");
    }
    std::sort(raw.begin(), raw.end(), [](const Interval &a, const Interval &b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    std::vector<Interval> merged;
    merged.reserve(raw.size());
    merged.push_back(raw.front());
    for (auto it = raw.begin() + 1; it != raw.end(); ++it) {
        auto &last = merged.back();
        if (it->lo <= last.hi) {
            last.hi = std::max(last.hi, it->hi);
        } else {
            merged.push_back(*it);
        }
    }
    return IntervalUnion(std::move(merged));
}

IntervalUnion::IntervalUnion(NonStdValue point)
    : parts_{Interval{point, point}} {}

IntervalUnion::IntervalUnion(NonStdValue lo, NonStdValue hi)
    : IntervalUnion(canonicalize({Interval{lo, hi}})) {}

bool IntervalUnion::contains(const NonStdValue &v) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Interval &p) { return p.contains(v); });
}

bool IntervalUnion::all_points() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const Interval &p) { return p.is_point(); });
}

namespace {

template <typename PartOp>
IntervalUnion pairwise(const IntervalUnion &a, const IntervalUnion &b, PartOp op) {
    std::vector<Interval> raw;
    raw.reserve(a.parts().size() * b.parts().size());
    for (const auto &pa : a.parts()) {
        for (const auto &pb : b.parts()) raw.push_back(op(pa, pb));
    }
    return IntervalUnion::canonicalize(std::move(raw));
}

} // namespace

IntervalUnion operator+(const IntervalUnion &a, const IntervalUnion &b) {
    return pairwise(a, b, [](const Interval &x, const Interval &y) {
        return Interval{x.lo + y.lo, x.hi + y.hi};
    });
}

IntervalUnion operator-(const IntervalUnion &a, const IntervalUnion &b) {
    return pairwise(a, b, [](const Interval &x, const Interval &y) {
        return Interval{x.lo - y.hi, x.hi - y.lo};
    });
}

IntervalUnion operator*(const IntervalUnion &a, const IntervalUnion &b) {
    return pairwise(a, b, [](const Interval &x, const Interval &y) {
        const std::array<NonStdValue, 4> products{x.lo * y.lo, x.lo * y.hi,
                                                  x.hi * y.lo, x.hi * y.hi};
        const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
        return Interval{*lo, *hi};
    });
}

IntervalUnion div_scalar(const IntervalUnion &s, double k) {
    if (k == 0.0) throw Error("division by zero scalar");
    std::vector<Interval> raw;
    raw.reserve(s.parts().size());
    for (const auto &p : s.parts()) {
        auto lo = div_scalar(p.lo, k);
        auto hi = div_scalar(p.hi, k);
        if (k < 0) std::swap(lo, hi);
        raw.push_back({lo, hi});
    }
    return IntervalUnion::canonicalize(std::move(raw));
}

IntervalUnion clamp_unit(const IntervalUnion &s) {
    std::vector<Interval> raw;
    raw.reserve(s.parts().size());
    for (const auto &p : s.parts()) raw.push_back({clamp_unit(p.lo), clamp_unit(p.hi)});
    return IntervalUnion::canonicalize(std::move(raw));
}

bool approx_equal(const IntervalUnion &a, const IntervalUnion &b, double tol) noexcept {
    if (a.parts().size() != b.parts().size()) return false;
    for (std::size_t k = 0; k < a.parts().size(); ++k) {
        if (!approx_equal(a.parts()[k].lo, b.parts()[k].lo, tol) ||
            !approx_equal(a.parts()[k].hi, b.parts()[k].hi, tol)) {
            return false;
        }
    }
    return true;
}

} // namespace neutro
