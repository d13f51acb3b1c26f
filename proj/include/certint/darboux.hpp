#pragma once

#include <cstddef>
#include <vector>

#include "certint/funcmodel.hpp"

namespace certint {

/// Strictly increasing list of at least two exact points.
class Partition {
public:
    Partition(std::vector<Rational> points);

    const std::vector<Rational>& points() const { return points_; }
    std::size_t cell_count() const { return points_.size() - 1; }
    Interval cell(std::size_t i) const { return Interval(points_[i], points_[i + 1]); }
    Interval span() const { return Interval(points_.front(), points_.back()); }
    Rational mesh() const;

    /// Returns a refinement with x inserted (no-op when already present).
    Partition refined_with(const Rational& x) const;

    static Partition uniform(const Interval& I, std::size_t cells);

private:
    std::vector<Rational> points_;
};

/// Upper and lower Darboux sums over a partition. When a side is not exact it
/// is still a sound bound for the corresponding sum (upper from above, lower
/// from below).
struct DarbouxSums {
    Rational upper;
    Rational lower;
    bool upper_exact = false;
    bool lower_exact = false;
};

enum class CertStatus { Certified, NotCertified };

/**
 * Two-sided enclosures of the lower and upper Darboux integrals. Keeping
 * both sides first-class lets non-integrable functions carry an honest,
 * persistent gap instead of a fake value.
 */
struct IntegralEnclosure {
    Interval lower_integral;  // contains the true lower Darboux integral
    Interval upper_integral;  // contains the true upper Darboux integral
    Rational gap_upper_bound; // certified bound for (upper - lower) integral
    Partition partition_used;
    DarbouxSums sums;         // raw sums over partition_used
    CertStatus status = CertStatus::NotCertified;

    bool certified() const { return status == CertStatus::Certified; }
};

inline constexpr std::size_t kDefaultIntegrateBudget = 4096;

/// Exact (or soundly bounded) Darboux sums of f over P.
DarbouxSums darboux_sums(const FuncModel& f, const Partition& P);

/**
 * Adaptive refinement: seeds the partition with the model's natural split
 * points, then repeatedly bisects the cell with the largest osc*width
 * contribution (ties leftmost) until the certified gap bound drops to eps or
 * the cell budget is reached. eps = 0 means "certify exactly or exhaust the
 * budget"; a NotCertified result is the correct outcome for non-integrable
 * inputs.
 */
IntegralEnclosure integrate(const FuncModel& f, const Interval& I, const Rational& eps,
                            std::size_t budget = kDefaultIntegrateBudget);

/// The same refinement loop driven by the raw partition gap sum(osc*width)
/// alone, ignoring model-exact integral bounds. The continuity-point search
/// needs the partition itself to carry small oscillation mass.
Partition refine_partition(const FuncModel& f, const Interval& I, const Rational& eps,
                           std::size_t budget = kDefaultIntegrateBudget);

/// Checks m*(b-a) <= lower integral <= upper integral <= M*(b-a) against the
/// certified enclosures, with [m, M] the exact global range of f over I.
/// Throws RangeNotExactError when the model cannot give an exact range.
bool global_bounds_check(const FuncModel& f, const Interval& I, const IntegralEnclosure& enc);

} // namespace certint
