#include "certint/darboux.hpp"

#include <algorithm>
#include <queue>

namespace certint {

Partition::Partition(std::vector<Rational> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw Error("partition needs at least two points");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1] < points_[i]))
            throw Error("partition points must be strictly increasing");
}

Rational Partition::mesh() const {
    Rational m(0);
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        m = max(m, points_[i + 1] - points_[i]);
    return m;
}

Partition Partition::refined_with(const Rational& x) const {
    auto pts = points_;
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (it == pts.end() || !(*it == x)) pts.insert(it, x);
    return Partition(std::move(pts));
}

Partition Partition::uniform(const Interval& I, std::size_t cells) {
    if (cells == 0) throw Error("uniform partition needs at least one cell");
    std::vector<Rational> pts;
    pts.reserve(cells + 1);
    const Rational w = I.width();
    for (std::size_t i = 0; i <= cells; ++i)
        pts.push_back(I.lo() + w * Rational(static_cast<long>(i), static_cast<long>(cells)));
    return Partition(std::move(pts));
}

DarbouxSums darboux_sums(const FuncModel& f, const Partition& P) {
    DarbouxSums s{Rational(0), Rational(0), true, true};
    for (std::size_t i = 0; i < P.cell_count(); ++i) {
        const Interval cell = P.cell(i);
        const RangeResult r = f.range(cell);
        const Rational w = cell.width();
        s.upper += r.bounds.hi() * w;
        s.lower += r.bounds.lo() * w;
        s.upper_exact = s.upper_exact && r.exact;
        s.lower_exact = s.lower_exact && r.exact;
    }
    return s;
}

namespace {

struct CellEntry {
    Interval cell;
    RangeResult range;
    Rational score; // osc * width
    std::size_t seq;
};

struct CellOrder {
    // Largest score first; ties broken leftmost, then by insertion order.
    bool operator()(const CellEntry& a, const CellEntry& b) const {
        if (!(a.score == b.score)) return a.score < b.score;
        if (!(a.cell.lo() == b.cell.lo())) return b.cell.lo() < a.cell.lo();
        return a.seq > b.seq;
    }
};

} // namespace

namespace {

std::vector<CellEntry> refine_cells(const FuncModel& f, const Interval& I, const Rational& eps,
                                    std::size_t budget, const Rational* hook_gap) {
    // Seed with the model's natural split points.
    std::vector<Rational> pts{I.lo()};
    for (const Rational& s : f.split_points(I)) pts.push_back(s);
    pts.push_back(I.hi());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<CellEntry, std::vector<CellEntry>, CellOrder> heap;
    std::size_t seq = 0;
    Rational gap(0); // running sum of osc*width over live cells
    auto push_cell = [&](const Interval& cell) {
        const RangeResult r = f.range(cell);
        const Rational score = (r.bounds.hi() - r.bounds.lo()) * cell.width();
        gap += score;
        heap.push(CellEntry{cell, r, score, seq++});
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) push_cell(Interval(pts[i], pts[i + 1]));

    auto best_gap = [&]() { return hook_gap && *hook_gap < gap ? *hook_gap : gap; };

    while (best_gap() > eps && heap.size() < budget) {
        CellEntry top = heap.top();
        if (top.score.is_zero()) break; // nothing left to improve
        heap.pop();
        gap -= top.score;
        const Rational m = top.cell.midpoint();
        push_cell(Interval(top.cell.lo(), m));
        push_cell(Interval(m, top.cell.hi()));
    }

    std::vector<CellEntry> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        cells.push_back(heap.top());
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(),
              [](const CellEntry& a, const CellEntry& b) { return a.cell.lo() < b.cell.lo(); });
    return cells;
}

} // namespace

IntegralEnclosure integrate(const FuncModel& f, const Interval& I, const Rational& eps,
                            std::size_t budget) {
    if (eps.sign() < 0) throw PreconditionError("integrate needs eps >= 0");
    if (!f.domain().contains(I))
        throw OutOfDomainError("integrate over " + I.str() + " outside " + f.domain().str());
    if (I.is_degenerate())
        throw PreconditionError("integrate needs a nondegenerate interval");

    const auto hook = f.darboux_bounds(I);
    Rational hook_gap(0);
    if (hook) {
        hook_gap = hook->upper_integral.hi() - hook->lower_integral.lo();
        if (hook_gap.sign() < 0) hook_gap = Rational(0);
    }
    const auto cells = refine_cells(f, I, eps, budget, hook ? &hook_gap : nullptr);

    DarbouxSums sums{Rational(0), Rational(0), true, true};
    std::vector<Rational> final_pts;
    final_pts.push_back(I.lo());
    for (const auto& c : cells) {
        sums.upper += c.range.bounds.hi() * c.cell.width();
        sums.lower += c.range.bounds.lo() * c.cell.width();
        sums.upper_exact = sums.upper_exact && c.range.exact;
        sums.lower_exact = sums.lower_exact && c.range.exact;
        final_pts.push_back(c.cell.hi());
    }

    // Generic enclosure [L, U] for both true integrals, intersected with any
    // model-exact bounds.
    Interval lower_enc(sums.lower, sums.upper);
    Interval upper_enc(sums.lower, sums.upper);
    if (hook) {
        if (auto t = intersect(lower_enc, hook->lower_integral)) lower_enc = *t;
        else lower_enc = hook->lower_integral;
        if (auto t = intersect(upper_enc, hook->upper_integral)) upper_enc = *t;
        else upper_enc = hook->upper_integral;
    }
    Rational gap_ub = upper_enc.hi() - lower_enc.lo();
    if (gap_ub.sign() < 0) gap_ub = Rational(0);

    IntegralEnclosure enc{lower_enc, upper_enc, gap_ub, Partition(std::move(final_pts)), sums,
                          gap_ub <= eps ? CertStatus::Certified : CertStatus::NotCertified};
    return enc;
}

Partition refine_partition(const FuncModel& f, const Interval& I, const Rational& eps,
                           std::size_t budget) {
    if (eps.sign() < 0) throw PreconditionError("refine_partition needs eps >= 0");
    if (I.is_degenerate())
        throw PreconditionError("refine_partition needs a nondegenerate interval");
    const auto cells = refine_cells(f, I, eps, budget, nullptr);
    std::vector<Rational> pts;
    pts.push_back(I.lo());
    for (const auto& c : cells) pts.push_back(c.cell.hi());
    return Partition(std::move(pts));
}

bool global_bounds_check(const FuncModel& f, const Interval& I, const IntegralEnclosure& enc) {
    const RangeResult r = f.range(I);
    if (!r.exact) throw RangeNotExactError("global bounds need an exact range over " + I.str());
    const Rational w = I.width();
    const Rational lo_bound = r.bounds.lo() * w;
    const Rational hi_bound = r.bounds.hi() * w;
    return lo_bound <= enc.lower_integral.lo() && enc.lower_integral.lo() <= enc.upper_integral.hi() &&
           enc.upper_integral.hi() <= hi_bound;
}

} // namespace certint
