#include "certint/oscillation.hpp"

#include <algorithm>

namespace certint {

OscValue osc_interval(const FuncModel& f, const Interval& I) {
    const RangeResult r = f.range(I);
    const Rational w = r.bounds.hi() - r.bounds.lo();
    if (r.exact) return {Interval(w, w), true};
    return {Interval(Rational(0), w), false};
}

OscValue osc_point(const FuncModel& f, const Rational& c,
                   const std::vector<Rational>& delta_schedule) {
    if (!f.domain().contains_strictly(c))
        throw OutOfDomainError("point oscillation needs an interior point, got " + c.str());
    if (delta_schedule.empty()) throw PreconditionError("empty radius schedule");
    for (std::size_t i = 0; i < delta_schedule.size(); ++i) {
        if (delta_schedule[i].sign() <= 0)
            throw PreconditionError("radius schedule must be positive");
        if (i > 0 && !(delta_schedule[i] < delta_schedule[i - 1]))
            throw PreconditionError("radius schedule must decrease");
    }

    Rational best_hi(-1);
    bool zero_certified = false;
    const Interval dom = f.domain();
    for (const Rational& d : delta_schedule) {
        const Interval ball(max(dom.lo(), c - d), min(dom.hi(), c + d));
        const OscValue o = osc_interval(f, ball);
        if (best_hi.sign() < 0 || o.value.hi() < best_hi) best_hi = o.value.hi();
        if (o.exact && o.value.hi().is_zero()) zero_certified = true;
    }

    if (auto exact = f.point_oscillation(c)) return {Interval(*exact, *exact), true};
    if (zero_certified) return {Interval(Rational(0), Rational(0)), true};
    return {Interval(Rational(0), best_hi), false};
}

bool verify_continuity_witness(const FuncModel& f, const ContinuityWitness& w) {
    if (w.radius.sign() <= 0) return false;
    const Interval ball(w.point - w.radius, w.point + w.radius);
    if (!f.domain().contains(ball)) return false;
    const RangeResult r = f.range(ball);
    return r.bounds.hi() - r.bounds.lo() <= w.osc_bound;
}

bool validate_trace(const FuncModel& f, const Interval& I, const NestedIntervalTrace& t) {
    Interval prev = I;
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const NestedStage& st = t.stages[i];
        const Rational inv_n(1, static_cast<long>(i + 1));
        if (!prev.contains_strictly(st.interval)) return false;
        if (!(st.width == st.interval.width())) return false;
        if (!(st.width < inv_n)) return false;
        if (!(st.osc_bound < inv_n)) return false;
        const RangeResult r = f.range(st.interval);
        if (!(r.bounds.hi() - r.bounds.lo() <= st.osc_bound)) return false;
        if (!st.interval.contains(t.limit_point)) return false;
        prev = st.interval;
    }
    return !t.stages.empty();
}

namespace {

Rational osc_bound_of(const FuncModel& f, const Interval& I) {
    const RangeResult r = f.range(I);
    return r.bounds.hi() - r.bounds.lo();
}

/// Searches cell (and bounded subdivisions of it) for a closed subinterval
/// with oscillation bound strictly below `bound`. Leftmost-first and probe
/// limited, so non-integrable inputs fail fast.
std::optional<Interval> low_osc_subcell(const FuncModel& f, const Interval& cell,
                                        const Rational& bound, int depth, int& probes) {
    if (probes <= 0 || cell.is_degenerate()) return std::nullopt;
    --probes;
    if (osc_bound_of(f, cell) < bound) return cell;
    if (depth <= 0) return std::nullopt;
    const Rational w = cell.width();
    const Interval inner(cell.lo() + w / Rational(4), cell.hi() - w / Rational(4));
    if (probes > 0) {
        --probes;
        if (osc_bound_of(f, inner) < bound) return inner;
    }
    const Rational m = cell.midpoint();
    if (auto left = low_osc_subcell(f, Interval(cell.lo(), m), bound, depth - 1, probes))
        return left;
    return low_osc_subcell(f, Interval(m, cell.hi()), bound, depth - 1, probes);
}

/// Shrinks sel strictly inside itself with width below 1/n: first pull both
/// ends in by a quarter width, then clamp the half-width.
Interval shrink_stage_interval(const Interval& sel, std::size_t n) {
    const Rational w = sel.width();
    const Rational m = sel.midpoint();
    Rational half = w / Rational(4);
    const Rational clamp = Rational(7, 16) / Rational(static_cast<long>(n));
    if (clamp < half) half = clamp;
    return Interval(m - half, m + half);
}

/// Picks a point of J not colliding with the model's breakpoints or known
/// discontinuities.
Rational pick_point_avoiding(const FuncModel& f, const Interval& J) {
    std::vector<Rational> avoid = f.discontinuity_points();
    for (const Rational& s : f.split_points(J)) avoid.push_back(s);
    std::sort(avoid.begin(), avoid.end());
    Rational c = J.midpoint();
    Rational offs = J.width() / Rational(8);
    while (std::binary_search(avoid.begin(), avoid.end(), c)) {
        c += offs;
        offs /= Rational(2);
    }
    return c;
}

} // namespace

ContinuityWitness find_continuity_point(const FuncModel& f, const Interval& I,
                                        std::size_t n_target, std::size_t budget) {
    if (n_target == 0) throw PreconditionError("n_target must be positive");
    if (I.is_degenerate()) throw PreconditionError("continuity search needs a nondegenerate interval");
    if (!f.domain().contains(I)) throw OutOfDomainError("search interval outside domain");

    NestedIntervalTrace trace;
    Interval J = I;
    for (std::size_t n = 1; n <= n_target; ++n) {
        const Rational inv_n(1, static_cast<long>(n));
        // A partition of J whose oscillation mass aims below width(J)/n.
        const Rational eps = J.width() * inv_n / Rational(2);
        const Partition P = refine_partition(f, J, eps, budget);

        std::optional<Interval> sel;
        for (std::size_t i = 0; i < P.cell_count() && !sel; ++i) {
            const Interval cell = P.cell(i);
            if (osc_bound_of(f, cell) < inv_n) sel = cell;
        }
        if (!sel) {
            // Direct scan failed (spiked endpoints can poison every cell of
            // an aligned partition); look for low-oscillation subcells.
            int probes = 4096;
            for (std::size_t i = 0; i < P.cell_count() && !sel; ++i)
                sel = low_osc_subcell(f, P.cell(i), inv_n, 10, probes);
        }
        if (!sel)
            throw NoContinuityCertificateError("no cell with oscillation below 1/" +
                                               std::to_string(n) + " inside " + J.str());

        const Interval stage_interval = shrink_stage_interval(*sel, n);
        const Rational bound = min(osc_bound_of(f, stage_interval), osc_bound_of(f, *sel));
        trace.stages.push_back(NestedStage{stage_interval, bound, stage_interval.width()});
        J = stage_interval;
    }

    const Rational point = pick_point_avoiding(f, J);
    trace.limit_point = point;
    const Rational radius = min(point - J.lo(), J.hi() - point);
    ContinuityWitness w{point, radius, trace.stages.back().osc_bound, std::move(trace)};
    return w;
}

DenseContinuitySample dense_continuity_sample(const FuncModel& f,
                                              const std::vector<Interval>& subintervals,
                                              std::size_t n_target, std::size_t budget) {
    DenseContinuitySample out;
    out.results.reserve(subintervals.size());
    for (const Interval& cell : subintervals) {
        try {
            out.results.push_back(find_continuity_point(f, cell, n_target, budget));
            ++out.found;
        } catch (const NoContinuityCertificateError&) {
            out.results.push_back(std::nullopt);
        }
    }
    return out;
}

} // namespace certint
