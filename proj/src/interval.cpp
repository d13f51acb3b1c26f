#include "certint/interval.hpp"

#include <algorithm>

namespace certint {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw Error("interval endpoints out of order: [" + lo_.str() + ", " + hi_.str() + "]");
}

Interval add(const Interval& x, const Interval& y) {
    return Interval(x.lo() + y.lo(), x.hi() + y.hi());
}

Interval sub(const Interval& x, const Interval& y) {
    return Interval(x.lo() - y.hi(), x.hi() - y.lo());
}

Interval mul(const Interval& x, const Interval& y) {
    const Rational a = x.lo() * y.lo();
    const Rational b = x.lo() * y.hi();
    const Rational c = x.hi() * y.lo();
    const Rational d = x.hi() * y.hi();
    return Interval(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)));
}

Interval hull(const Interval& x, const Interval& y) {
    return Interval(min(x.lo(), y.lo()), max(x.hi(), y.hi()));
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
    const Rational lo = max(x.lo(), y.lo());
    const Rational hi = min(x.hi(), y.hi());
    if (hi < lo) return std::nullopt;
    return Interval(lo, hi);
}

Interval interval_arith(IntervalOp op, const Interval& x, const Interval& y) {
    switch (op) {
    case IntervalOp::Add: return add(x, y);
    case IntervalOp::Sub: return sub(x, y);
    case IntervalOp::Mul: return mul(x, y);
    case IntervalOp::Hull: return hull(x, y);
    case IntervalOp::Intersect: {
        auto r = intersect(x, y);
        if (!r) throw EmptyIntersectionError(x.str() + " and " + y.str());
        return *r;
    }
    }
    throw Error("unknown interval op");
}

} // namespace certint
