#pragma once

// Test-only reference computations. Nothing here calls into the library's
// arithmetic: inputs and outputs are plain doubles.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace neutro::testing {

// (r1 + c1 e)(r2 + c2 e) = r1 r2 + (r1 c2 + r2 c1) e + c1 c2 e^2, kept in full.
struct Expansion {
    double standard;
    double first;
    double second;
};

inline Expansion expand_product(double r1, double c1, double r2, double c2) {
    return {r1 * r2, r1 * c2 + r2 * c1, c1 * c2};
}

// Sign of the lowest-order non-vanishing infinitesimal term.
inline int leading_infinitesimal_sign(const Expansion &e) {
    if (e.first != 0.0) return e.first > 0 ? 1 : -1;
    if (e.second != 0.0) return e.second > 0 ? 1 : -1;
    return 0;
}

using RawInterval = std::pair<double, double>;
using RawUnion = std::vector<RawInterval>;

struct Cluster {
    double lo;
    double hi;
};

// Grid points lo, lo + step, ..., plus hi itself.
inline std::vector<double> sample(const RawUnion &s, double step) {
    std::vector<double> out;
    for (const auto &[lo, hi] : s) {
        const auto n = static_cast<long>(std::floor((hi - lo) / step));
        for (long k = 0; k <= n; ++k) out.push_back(lo + static_cast<double>(k) * step);
        out.push_back(hi);
    }
    return out;
}

// Brute-force image {op(a, b) : a in s1, b in s2} on a step grid. Values are
// binned into step-wide buckets centred on multiples of step; maximal runs
// of occupied buckets become clusters, reported by their exact sampled
// extremes. Gaps narrower than one bucket are not resolvable.
inline std::vector<Cluster> dense_image(const RawUnion &s1, const RawUnion &s2,
                                        const std::function<double(double, double)> &op,
                                        double step = 1e-3, double range_lo = -3.0,
                                        double range_hi = 3.0) {
    const auto a = sample(s1, step);
    const auto b = sample(s2, step);
    const auto buckets = static_cast<std::size_t>((range_hi - range_lo) / step) + 2;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> lo(buckets, inf);
    std::vector<double> hi(buckets, -inf);
    for (double x : a) {
        for (double y : b) {
            const double v = op(x, y);
            const auto k = static_cast<std::size_t>(std::floor((v - range_lo) / step + 0.5));
            lo[k] = std::min(lo[k], v);
            hi[k] = std::max(hi[k], v);
        }
    }
    std::vector<Cluster> out;
    bool open = false;
    for (std::size_t k = 0; k < buckets; ++k) {
        const bool occupied = lo[k] != inf;
        if (occupied && !open) {
            out.push_back({lo[k], hi[k]});
            open = true;
        } else if (occupied) {
            out.back().hi = std::max(out.back().hi, hi[k]);
        } else {
            open = false;
        }
    }
    return out;
}

// Merges clusters whose gap is below `resolution`, mirroring what the
// sampling oracle can distinguish.
inline std::vector<Cluster> coarsen(std::vector<Cluster> parts, double resolution) {
    std::vector<Cluster> out;
    for (const auto &p : parts) {
        if (!out.empty() && p.lo - out.back().hi < resolution) {
            out.back().hi = std::max(out.back().hi, p.hi);
        } else {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace neutro::testing
