#pragma once

#include <optional>
#include <vector>

#include "certint/darboux.hpp"
#include "certint/funcmodel.hpp"

namespace certint {

/// Enclosure of an oscillation (always nonnegative).
struct OscValue {
    Interval value;
    bool exact = false;
};

/// Oscillation of f over I: the width of the range enclosure.
OscValue osc_interval(const FuncModel& f, const Interval& I);

/// Oscillation of f at an interior point c, bounded along a decreasing
/// schedule of radii; exact when the model knows the pointwise value or a
/// stage certifies oscillation zero.
OscValue osc_point(const FuncModel& f, const Rational& c,
                   const std::vector<Rational>& delta_schedule);

struct NestedStage {
    Interval interval;
    Rational osc_bound;
    Rational width;
};

/// Record of the nested-interval search: stage n satisfies
/// osc_bound < 1/n, width < 1/n, and lies strictly inside stage n-1.
struct NestedIntervalTrace {
    std::vector<NestedStage> stages;
    Rational limit_point;
};

/**
 * A certified continuity point: one range call re-checks
 * osc(f, [point - radius, point + radius]) <= osc_bound.
 */
struct ContinuityWitness {
    Rational point;
    Rational radius;
    Rational osc_bound;
    std::optional<NestedIntervalTrace> trace;
};

/// Re-checks the witness claim with a single range call.
bool verify_continuity_witness(const FuncModel& f, const ContinuityWitness& w);

/// Exact re-check of all three stage conditions plus limit-point membership.
bool validate_trace(const FuncModel& f, const Interval& I, const NestedIntervalTrace& t);

/**
 * Nested-interval continuity search: at stage n it builds a partition whose
 * oscillation mass is small, selects a cell with oscillation below 1/n,
 * shrinks it strictly inside with width below 1/n, and recurses. The witness
 * point is the midpoint of the final stage, nudged off the model's
 * breakpoints. Throws NoContinuityCertificateError when no stage-n cell
 * qualifies within budget (the expected outcome for non-integrable inputs).
 */
ContinuityWitness find_continuity_point(const FuncModel& f, const Interval& I,
                                        std::size_t n_target,
                                        std::size_t budget = kDefaultIntegrateBudget);

struct DenseContinuitySample {
    std::vector<std::optional<ContinuityWitness>> results; // aligned with the inputs
    std::size_t found = 0;
};

/// One witness strictly inside each requested subinterval; per-subinterval
/// failures are collected, not fatal.
DenseContinuitySample dense_continuity_sample(const FuncModel& f,
                                              const std::vector<Interval>& subintervals,
                                              std::size_t n_target,
                                              std::size_t budget = kDefaultIntegrateBudget);

} // namespace certint
