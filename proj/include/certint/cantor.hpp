#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "certint/interval.hpp"

namespace certint {

/**
 * Removal rule for a positive-measure (fat) Cantor set on [0,1].
 *
 * At stage n every kept interval loses a centered open subinterval of length
 * ratio^n. Admissibility requires the total removed length
 * sum_{n>=1} 2^{n-1} * ratio^n = ratio/(1-2*ratio) to stay below 1, and every
 * stage's removal to fit inside the kept intervals; ratio in (0, 1/3) covers
 * both. The default ratio 1/4 gives kept measure 1/2 + 2^-(n+1) at stage n
 * and limit measure 1/2.
 */
class FatCantorSpec {
public:
    explicit FatCantorSpec(Rational ratio = Rational(1, 4));

    const Rational& ratio() const { return ratio_; }
    /// Per-interval removed length at stage n (= ratio^n).
    Rational removal_length(std::size_t stage) const;
    /// Exact limit measure of the kept set, 1 - ratio/(1-2*ratio).
    Rational limit_measure() const;
    /// Total measure removed after stage n (exact geometric partial sum).
    Rational removed_after(std::size_t stage) const;

private:
    Rational ratio_;
};

struct FatCantorStage {
    std::size_t stage = 0;
    /// Ordered disjoint closed intervals kept at this stage.
    std::vector<Interval> kept;
    /// Open intervals removed AT this stage (endpoints stored closed).
    std::vector<Interval> removed;
    Rational kept_measure;
};

/**
 * Materialized construction up to a fixed depth. Stages are immutable once
 * built; queries are pure.
 */
class FatCantorSet {
public:
    FatCantorSet(FatCantorSpec spec, std::size_t depth);

    const FatCantorSpec& spec() const { return spec_; }
    std::size_t depth() const { return depth_; }
    const FatCantorStage& stage(std::size_t n) const;
    const FatCantorStage& deepest() const { return stage(depth_); }

    /// All intervals removed at stages 1..depth, ordered stage-major then
    /// left to right.
    std::vector<Interval> removed_up_to_depth() const;
    /// True iff x lies in the depth-d cover (the kept set at the deepest
    /// stage). Decided exactly.
    bool cover_contains(const Rational& x) const;
    /// True iff [lo,hi] meets the cover.
    bool cover_meets(const Interval& I) const;
    /// True iff I lies inside a single kept interval of the deepest stage.
    bool cover_contains_interval(const Interval& I) const;
    /// True iff I contains an endpoint of some kept interval at the deepest
    /// stage. Such endpoints survive every later stage, so they belong to
    /// the limit set.
    bool contains_kept_endpoint(const Interval& I) const;
    /// Exact measure of cover ∩ [0, x].
    Rational cover_measure_prefix(const Rational& x) const;
    /// Exact measure of cover ∩ I.
    Rational cover_measure(const Interval& I) const;
    /// kept_measure(depth) - limit measure: the mass still to be removed.
    Rational tail_slack() const;

private:
    FatCantorSpec spec_;
    std::size_t depth_;
    std::vector<FatCantorStage> stages_;
    std::vector<Rational> prefix_; // prefix_[i] = measure of first i kept intervals at deepest stage
};

using FatCantorSetPtr = std::shared_ptr<const FatCantorSet>;

/// Stage n of the construction (n = 0 is the unit interval).
FatCantorStage build_stage(const FatCantorSpec& spec, std::size_t n);

/// Exact limit measure of the kept set.
Rational limit_measure(const FatCantorSpec& spec);

/**
 * F(x) = integral of the limit-set indicator from 0 to x, as certified
 * enclosures computed from the depth-d cover: the cover measure bounds F
 * from above, and undershoots by at most the tail slack.
 */
class CantorIndefinite {
public:
    CantorIndefinite(FatCantorSpec spec, std::size_t depth);
    explicit CantorIndefinite(FatCantorSetPtr set) : set_(std::move(set)) {}

    const FatCantorSet& set() const { return *set_; }
    std::size_t depth() const { return set_->depth(); }

    /// Enclosure of F(x) for x in [0,1]; width <= tail_slack().
    Interval eval(const Rational& x) const;

    struct ZeroDerivativeWitness {
        Rational point;
        Rational radius;
    };
    /// Points in removed open intervals, with radii keeping the ball inside;
    /// on each ball the integrand vanishes identically, so every difference
    /// quotient of F is enclosed in [0,0]. Returns min(count, available).
    std::vector<ZeroDerivativeWitness> zero_derivative_witnesses(std::size_t count) const;
    /// Re-checks one witness: the ball must avoid the cover entirely.
    bool verify_zero_derivative(const ZeroDerivativeWitness& w) const;

    struct NonconstancyReport {
        Interval f_at_one;
        Rational f_at_zero;
        std::size_t witness_count = 0;
        bool certified = false; // F(1) > F(0) with zero-derivative points available
    };
    NonconstancyReport nonconstancy_report() const;

private:
    FatCantorSetPtr set_;
};

} // namespace certint
