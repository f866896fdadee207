#ifndef LORENTZ_INTERVAL_HPP
#define LORENTZ_INTERVAL_HPP

#include <algorithm>
#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

/// Certified enclosure [lo, hi] of a nonnegative scalar quantity.
///
/// Widths account for series truncation only; double rounding is orders
/// of magnitude below the tolerances used throughout (1e-6 .. 1e-12).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double v) { return {v, v}; }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator+(double v) const { return {lo + v, hi + v}; }

    /// Enclosure of (this - o), clamped at zero for nonnegative quantities.
    Interval minus_clamped(const Interval& o) const {
        return {std::max(0.0, lo - o.hi), std::max(0.0, hi - o.lo)};
    }

    Interval scaled(double factor) const {
        // factor >= 0 expected
        return {lo * factor, hi * factor};
    }
};

inline Interval make_interval(double lo, double hi) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw SpecError("interval bounds must be finite and ordered");
    return {lo, hi};
}

} // namespace lorentz

#endif
