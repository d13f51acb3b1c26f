#pragma once

#include <optional>

#include "certint/darboux.hpp"
#include "certint/oscillation.hpp"

namespace certint {

enum class WitnessKind { EpsilonPair, InequalityPair, Exact, BoundedPair };

/// One witness point together with its recorded value and, when the claim
/// requires it, a continuity certificate.
struct SideWitness {
    Point point;
    Rational value;
    std::optional<ContinuityWitness> continuity;
};

/**
 * Machine-checkable mean-value witnesses. All comparisons against the
 * integral are made conservatively through the enclosure's outer bounds, so
 * a verified witness certifies the claim for the true integral.
 */
struct MvtWitness {
    WitnessKind kind;
    Interval interval;
    std::optional<Rational> epsilon;   // EpsilonPair
    std::optional<Rational> tolerance; // Exact
    std::optional<SideWitness> c1;     // "below" side (Exact stores its point here)
    std::optional<SideWitness> c2;     // "above" side
    Interval lower_integral;
    Interval upper_integral;
    std::size_t bisection_steps = 0;   // Exact
    std::size_t budget = kDefaultIntegrateBudget;
};

/// Re-verifies a witness from scratch: fresh evaluation, fresh integration,
/// exact comparisons, continuity certificates re-checked.
bool verify_mvt_witness(const FuncModel& f, const MvtWitness& w);

/// Strict eps-witnesses at certified continuity points:
/// f(c1)(b-a) < integral + eps and integral - eps < f(c2)(b-a).
MvtWitness epsilon_witnesses(const FuncModel& f, const Interval& I, const Rational& eps,
                             std::size_t n_cont = 8, std::size_t budget = kDefaultIntegrateBudget);

/// Non-strict witnesses at certified continuity points:
/// f(c1)(b-a) <= integral <= f(c2)(b-a).
MvtWitness inequality_witnesses(const FuncModel& f, const Interval& I, std::size_t n_cont = 8,
                                std::size_t budget = kDefaultIntegrateBudget);

/// Bisection between the inequality witnesses for a continuous model, until
/// |f(c)(b-a) - integral| <= tol*(b-a). The reported point is rational, with
/// a certified residual bound; exact equality points are irrational in
/// general.
MvtWitness exact_witness_continuous(const FuncModel& f, const Interval& I, const Rational& tol,
                                    std::size_t n_cont = 8,
                                    std::size_t budget = kDefaultIntegrateBudget);

/// Derivative mean-value inequalities for bounded, possibly non-integrable
/// integrands: witnesses bound the lower/upper Darboux integrals and need no
/// continuity. Either side may honestly fail (empty optional) when the model
/// cannot attain the bound.
MvtWitness bounded_mean_inequality(const FuncModel& f, const Interval& I,
                                   std::size_t budget = kDefaultIntegrateBudget);

/**
 * The |x - center| demonstration: the set of points where
 * F'(c)(b-a) = F(b)-F(a) is empty, while both one-sided inequality
 * witnesses exist. A linear control reports a nonempty equality set.
 */
struct EqualityWitnessDemo {
    bool applicable = false;
    bool equality_set_empty = false;
    Rational delta;                     // F(b) - F(a)
    std::vector<Rational> slope_values; // derivative values attained off the kink
    std::optional<Rational> c1, c2;     // inequality witnesses when they exist
};
EqualityWitnessDemo no_equality_witness_demo(const FuncModel& F);

/// Exact Lebesgue measures of {f <= mean} and {f >= mean} for a step
/// function (finite unions of intervals; breakpoints are null). Both are
/// strictly positive for every step function.
struct StepMeasureReport {
    Rational threshold;
    Rational sublevel_measure;
    Rational superlevel_measure;
};
StepMeasureReport step_sublevel_measures(const FuncModel& f, const Interval& I);

/// For a step integrand vanishing off its breakpoints, checks that the
/// indefinite integral is exactly constant on a dense rational probe set.
/// Rejects inputs with a nonzero piece value.
bool zero_step_constancy_check(const FuncModel& f, std::size_t probe_count = 256);

} // namespace certint
