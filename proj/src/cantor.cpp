#include "certint/cantor.hpp"

#include <algorithm>

namespace certint {

FatCantorSpec::FatCantorSpec(Rational ratio) : ratio_(std::move(ratio)) {
    if (ratio_.sign() <= 0 || !(ratio_ < Rational(1, 3)))
        throw InadmissibleSpecError("stage ratio must lie in (0, 1/3), got " + ratio_.str());
}

Rational FatCantorSpec::removal_length(std::size_t stage) const {
    Rational r(1);
    for (std::size_t k = 0; k < stage; ++k) r *= ratio_;
    return r;
}

Rational FatCantorSpec::limit_measure() const {
    // sum_{n>=1} 2^{n-1} ratio^n = ratio / (1 - 2 ratio)
    return Rational(1) - ratio_ / (Rational(1) - Rational(2) * ratio_);
}

Rational FatCantorSpec::removed_after(std::size_t stage) const {
    // Partial geometric sum: sum_{n=1..N} 2^{n-1} ratio^n.
    Rational sum(0), term = ratio_; // term = 2^{n-1} ratio^n starting at n=1
    for (std::size_t n = 1; n <= stage; ++n) {
        sum += term;
        term *= Rational(2) * ratio_;
    }
    return sum;
}

FatCantorSet::FatCantorSet(FatCantorSpec spec, std::size_t depth)
    : spec_(std::move(spec)), depth_(depth) {
    FatCantorStage cur;
    cur.stage = 0;
    cur.kept.push_back(Interval(Rational(0), Rational(1)));
    cur.kept_measure = Rational(1);
    stages_.push_back(cur);
    for (std::size_t n = 1; n <= depth_; ++n) {
        const Rational len = spec_.removal_length(n);
        const Rational half = len / Rational(2);
        FatCantorStage next;
        next.stage = n;
        next.kept_measure = Rational(0);
        for (const Interval& iv : stages_.back().kept) {
            if (!(len < iv.width()))
                throw InadmissibleSpecError("stage " + std::to_string(n) +
                                            " removal does not fit inside kept intervals");
            const Rational c = iv.midpoint();
            next.removed.push_back(Interval(c - half, c + half));
            next.kept.push_back(Interval(iv.lo(), c - half));
            next.kept.push_back(Interval(c + half, iv.hi()));
            next.kept_measure += iv.width() - len;
        }
        stages_.push_back(std::move(next));
    }
    prefix_.reserve(stages_.back().kept.size() + 1);
    prefix_.push_back(Rational(0));
    for (const Interval& iv : stages_.back().kept) prefix_.push_back(prefix_.back() + iv.width());
}

const FatCantorStage& FatCantorSet::stage(std::size_t n) const {
    if (n >= stages_.size()) throw Error("stage not materialized");
    return stages_[n];
}

std::vector<Interval> FatCantorSet::removed_up_to_depth() const {
    std::vector<Interval> out;
    for (std::size_t n = 1; n <= depth_; ++n)
        out.insert(out.end(), stages_[n].removed.begin(), stages_[n].removed.end());
    return out;
}

bool FatCantorSet::cover_contains(const Rational& x) const {
    const auto& kept = stages_[depth_].kept;
    // First kept interval whose hi >= x.
    auto it = std::lower_bound(kept.begin(), kept.end(), x,
                               [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
    return it != kept.end() && it->contains(x);
}

bool FatCantorSet::cover_meets(const Interval& I) const {
    const auto& kept = stages_[depth_].kept;
    auto it = std::lower_bound(kept.begin(), kept.end(), I.lo(),
                               [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
    return it != kept.end() && it->lo() <= I.hi();
}

bool FatCantorSet::cover_contains_interval(const Interval& I) const {
    const auto& kept = stages_[depth_].kept;
    auto it = std::lower_bound(kept.begin(), kept.end(), I.lo(),
                               [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
    return it != kept.end() && it->contains(I);
}

bool FatCantorSet::contains_kept_endpoint(const Interval& I) const {
    const auto& kept = stages_[depth_].kept;
    auto it = std::lower_bound(kept.begin(), kept.end(), I.lo(),
                               [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
    for (; it != kept.end() && !(I.hi() < it->lo()); ++it)
        if (I.contains(it->lo()) || I.contains(it->hi())) return true;
    return false;
}

Rational FatCantorSet::cover_measure_prefix(const Rational& x) const {
    const auto& kept = stages_[depth_].kept;
    if (x <= Rational(0)) return Rational(0);
    Rational total(0);
    auto it = std::lower_bound(kept.begin(), kept.end(), x,
                               [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
    const std::size_t idx = static_cast<std::size_t>(it - kept.begin());
    total = prefix_[idx];
    if (it != kept.end() && it->lo() < x) total += x - it->lo();
    return total;
}

Rational FatCantorSet::cover_measure(const Interval& I) const {
    return cover_measure_prefix(I.hi()) - cover_measure_prefix(I.lo());
}

Rational FatCantorSet::tail_slack() const {
    return stages_[depth_].kept_measure - spec_.limit_measure();
}

FatCantorStage build_stage(const FatCantorSpec& spec, std::size_t n) {
    return FatCantorSet(spec, n).stage(n);
}

Rational limit_measure(const FatCantorSpec& spec) { return spec.limit_measure(); }

CantorIndefinite::CantorIndefinite(FatCantorSpec spec, std::size_t depth)
    : set_(std::make_shared<FatCantorSet>(std::move(spec), depth)) {}

Interval CantorIndefinite::eval(const Rational& x) const {
    if (x < Rational(0) || Rational(1) < x)
        throw OutOfDomainError("cantor indefinite integral evaluated at " + x.str());
    const Rational upper = set_->cover_measure_prefix(x);
    Rational lower = upper - set_->tail_slack();
    if (lower < Rational(0)) lower = Rational(0);
    return Interval(lower, upper);
}

std::vector<CantorIndefinite::ZeroDerivativeWitness>
CantorIndefinite::zero_derivative_witnesses(std::size_t count) const {
    std::vector<ZeroDerivativeWitness> out;
    for (std::size_t n = 1; n <= set_->depth() && out.size() < count; ++n) {
        for (const Interval& gap : set_->stage(n).removed) {
            if (out.size() >= count) break;
            out.push_back({gap.midpoint(), gap.width() / Rational(4)});
        }
    }
    return out;
}

bool CantorIndefinite::verify_zero_derivative(const ZeroDerivativeWitness& w) const {
    const Interval ball(w.point - w.radius, w.point + w.radius);
    return !set_->cover_meets(ball);
}

CantorIndefinite::NonconstancyReport CantorIndefinite::nonconstancy_report() const {
    if (set_->depth() == 0)
        throw InadmissibleSpecError("nonconstancy demo needs at least one removal stage");
    NonconstancyReport rep{eval(Rational(1)), Rational(0), 0, false};
    auto ws = zero_derivative_witnesses(static_cast<std::size_t>(-1));
    std::size_t ok = 0;
    for (const auto& w : ws) ok += verify_zero_derivative(w) ? 1 : 0;
    rep.witness_count = ok;
    rep.certified = (rep.f_at_zero < rep.f_at_one.lo()) && ok > 0 && ok == ws.size();
    return rep;
}

} // namespace certint
