#pragma once

#include <optional>
#include <string>

#include "certint/rational.hpp"

namespace certint {

/**
 * Closed interval with exact rational endpoints, lo <= hi.
 *
 * The empty interval is not a value: constructing with lo > hi throws, and
 * intersection signals emptiness through std::optional. Open intervals from
 * the underlying mathematics are enforced by strict endpoint comparisons at
 * the operation level, never by a separate type.
 */
class Interval {
public:
    Interval(Rational lo, Rational hi);
    explicit Interval(const Rational& point) : Interval(point, point) {}

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool is_degenerate() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_strictly(const Rational& x) const { return lo_ < x && x < hi_; }
    /// True when o lies in the open interior (lo, hi).
    bool contains_strictly(const Interval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_, hi_;
};

/// Exact image arithmetic: the result equals {x op y : x in X, y in Y}.
Interval add(const Interval& x, const Interval& y);
Interval sub(const Interval& x, const Interval& y);
Interval mul(const Interval& x, const Interval& y);
/// Smallest interval containing both arguments.
Interval hull(const Interval& x, const Interval& y);
/// Empty intersection is a signal, not a value.
std::optional<Interval> intersect(const Interval& x, const Interval& y);

enum class IntervalOp { Add, Sub, Mul, Hull, Intersect };

/// Enum-dispatched variant of the operations above; Intersect throws
/// EmptyIntersectionError on disjoint inputs.
Interval interval_arith(IntervalOp op, const Interval& x, const Interval& y);

} // namespace certint
