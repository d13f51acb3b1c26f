#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "certint/darboux.hpp"
#include "certint/funcmodel.hpp"

namespace certint {

/**
 * F(x) = constant + integral of the integrand from base_point to x, carried
 * as certified enclosures. For exactly integrable integrands the enclosures
 * are degenerate; for depth-limited models they carry the model's tail
 * slack; for non-integrable integrands they honestly span the Darboux gap.
 */
class IndefiniteIntegral {
public:
    IndefiniteIntegral(FuncModelPtr integrand, Rational base_point, Rational constant,
                       std::size_t budget = kDefaultIntegrateBudget);

    const FuncModel& integrand() const { return *integrand_; }
    const FuncModelPtr& integrand_ptr() const { return integrand_; }
    const Rational& base_point() const { return base_; }
    const Rational& constant() const { return constant_; }
    std::size_t budget() const { return budget_; }
    Interval domain() const { return integrand_->domain(); }

    /// Enclosure of F(x); orientation-signed for x below the base point.
    Interval eval(const Rational& x) const;

private:
    FuncModelPtr integrand_;
    Rational base_;
    Rational constant_;
    std::size_t budget_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Rational, Interval> cache_;
};

inline Interval indefinite_eval(const IndefiniteIntegral& F, const Rational& x) {
    return F.eval(x);
}

/**
 * Difference-quotient enclosures around a point: for each radius, every
 * quotient (F(y)-F(z))/(y-z) with y in the punctured ball is contained in
 * the integrand's range over the ball. F'(z) = 0 is certified exactly when
 * some enclosure is [0,0]; nonexistence of F' is never claimed.
 */
struct DerivativeEnclosure {
    Rational point;
    std::vector<Rational> radii;
    std::vector<Interval> quotient_enclosures;
    bool zero_certified = false;
    std::optional<Rational> zero_radius;
};

DerivativeEnclosure derivative_enclosure(const IndefiniteIntegral& F, const Rational& z,
                                         const std::vector<Rational>& radii);

/// Searches a cell for a point with a certified zero derivative (a ball on
/// which the integrand vanishes identically).
std::optional<DerivativeEnclosure> find_zero_derivative_point(const IndefiniteIntegral& F,
                                                              const Interval& cell);

enum class HarnessVerdict { ConstantCertified, DenseZerosNotFound, Inapplicable };

struct HarnessReport {
    HarnessVerdict verdict;
    std::size_t cells_with_zero = 0;
    std::size_t cell_count = 0;
    bool integrable_certified = false;
    std::size_t constancy_probes = 0;
    std::size_t exact_probes = 0; // probes with width-0 enclosures equal to the constant
};

/**
 * Executable form of the dense-zero-derivative theorem: every probe cell
 * must yield a certified zero-derivative point AND the integrand must
 * certify integrable; then constancy of F is checked on a rational probe
 * grid. "Dense" means per-probe-cell here; true topological density is not
 * decidable from finitely many probes.
 */
HarnessReport dense_zero_derivative_harness(const IndefiniteIntegral& F,
                                            const std::vector<Interval>& probe_cells,
                                            std::size_t constancy_probes = 1000);

// ---------------------------------------------------------------------------
// Subdivision-variation criterion for indefinite Riemann integrals

/// Exact point evaluator consumed by the criterion sums.
class ExactFunction {
public:
    virtual ~ExactFunction() = default;
    virtual Rational operator()(const Rational& x) const = 0;
};

/// Evaluates a represented function directly (always exact).
class ModelEvaluator final : public ExactFunction {
public:
    explicit ModelEvaluator(FuncModelPtr f) : f_(std::move(f)) {}
    Rational operator()(const Rational& x) const override { return f_->eval(Point::rational(x)); }

private:
    FuncModelPtr f_;
};

/// Evaluates an indefinite integral, requiring width-0 enclosures.
class IndefiniteEvaluator final : public ExactFunction {
public:
    explicit IndefiniteEvaluator(const IndefiniteIntegral& F) : F_(F) {}
    Rational operator()(const Rational& x) const override;

private:
    const IndefiniteIntegral& F_;
};

/// Evaluates a finite table of exact samples; missing points are an error.
class TableEvaluator final : public ExactFunction {
public:
    explicit TableEvaluator(std::map<Rational, Rational> samples)
        : samples_(std::move(samples)) {}
    Rational operator()(const Rational& x) const override;
    const std::map<Rational, Rational>& samples() const { return samples_; }

private:
    std::map<Rational, Rational> samples_;
};

struct TagPair {
    Rational xi;
    Rational xi_prime;
};

enum class TagPolicy { Midpoint, Adversarial, Explicit };

/// One tagged-subdivision variation sum: per cell
/// |dF/dx over [x_{i-1}, xi] - dF/dx over [xi', x_i]| * cell width.
struct ThomsonReport {
    Partition subdivision;
    std::vector<TagPair> tags;
    Rational sum_value;
    TagPolicy policy = TagPolicy::Explicit;
};

ThomsonReport thomson_sum(const ExactFunction& F, const Partition& P,
                          const std::vector<TagPair>& tags);

/// Midpoint tags in every cell.
ThomsonReport thomson_midpoint(const ExactFunction& F, const Partition& P);

/// Maximizes every cell term independently over the candidate tag points
/// (pairs xi <= xi'), reporting a lower bound on the supremum over all tags.
ThomsonReport thomson_adversarial(const ExactFunction& F, const Partition& P,
                                  const std::vector<std::vector<Rational>>& candidates_per_cell);

/// Candidate tags per cell: inward offsets of the endpoints, the midpoint,
/// and the model's natural points inside the cell.
std::vector<std::vector<Rational>> default_tag_candidates(const FuncModel* model,
                                                          const Partition& P);

enum class ThomsonVerdict { ConsistentWithIndefinite, InconsistentEvidence };

/**
 * Honest semidecision for the subdivision-variation criterion: the full
 * (eps, delta) quantification is not computable, so the report carries the
 * adversarial sums along a schedule of uniform refinements and classifies
 * the trend. Evidence is inconsistent when the finest adversarial sum shows
 * no decay against the coarsest one.
 */
struct ThomsonScheduleReport {
    std::vector<ThomsonReport> levels; // adversarial sums on 2, 4, 8, ... cells
    ThomsonVerdict verdict = ThomsonVerdict::InconsistentEvidence;
};

ThomsonScheduleReport thomson_schedule(const ExactFunction& F, const Interval& span,
                                       const FuncModel* model, std::size_t levels = 5);

} // namespace certint
