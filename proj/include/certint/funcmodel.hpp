#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "certint/cantor.hpp"
#include "certint/interval.hpp"

namespace certint {

/**
 * A sample point: either an ordinary rational or pi * p/q with p, q positive
 * coprime integers. Pi-rational points exist because one represented
 * function takes prescribed values on them; every other model rejects them.
 */
class Point {
public:
    enum class Kind { Rational, PiRational };

    static Point rational(Rational v) { return Point(std::move(v)); }
    static Point pi_rational(mpz_class p, mpz_class q);

    Kind kind() const { return kind_; }
    const Rational& rat() const;
    const mpz_class& pi_num() const { return p_; }
    const mpz_class& pi_den() const { return q_; }

    std::string str() const;

private:
    explicit Point(Rational v) : kind_(Kind::Rational), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
    mpz_class p_{0}, q_{1};
};

/// Enclosure of a function's value set over an interval. `exact` asserts the
/// bounds equal [inf f, sup f] on that interval (the bounds themselves need
/// not be attained).
struct RangeResult {
    Interval bounds;
    bool exact = false;
};

/// Enclosures of the true lower and upper Darboux integrals over an interval.
struct DarbouxBounds {
    Interval lower_integral;
    Interval upper_integral;
};

/**
 * A represented real function: exact point evaluation plus a sound range
 * enclosure over subintervals of its domain. Models are immutable and all
 * operations are pure.
 */
class FuncModel {
public:
    virtual ~FuncModel() = default;

    virtual Interval domain() const = 0;

    /// Exact value at a point of the domain.
    Rational eval(const Point& x) const;
    Rational eval(const Rational& x) const { return eval(Point::rational(x)); }

    /// Sound enclosure of f over I (I must lie inside the domain).
    RangeResult range(const Interval& I) const;

    /// Natural refinement points strictly inside I (breakpoints, removal
    /// endpoints, piece boundaries). Default none.
    virtual std::vector<Rational> split_points(const Interval& I) const;

    /// Model-exact enclosures of the true Darboux integrals, when known in
    /// closed form.
    virtual std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const;

    /// Enclosure of the integral of the ideal represented function, when the
    /// model knows it more tightly than the Darboux gap (e.g. a limit-set
    /// indicator integrates to the limit measure).
    virtual std::optional<Interval> ideal_integral(const Interval& I) const;

    /// True when the model certifies continuity on its whole domain.
    virtual bool continuous_on_domain() const { return false; }

    /// Known discontinuity points (finite models only).
    virtual std::vector<Rational> discontinuity_points() const { return {}; }

    /// Maximal known open intervals inside I on which f vanishes
    /// identically; any closed ball strictly inside one has range [0,0].
    virtual std::vector<Interval> zero_runs(const Interval& I) const;

    /// Exact oscillation of f at an interior point, when the model can
    /// compute it in closed form.
    virtual std::optional<Rational> point_oscillation(const Rational& c) const;

    /// A point strictly inside I whose value exceeds t (strictly or not).
    /// Empty when the model cannot produce one.
    virtual std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                                  bool strict) const;
    virtual std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                                  bool strict) const;

    /// Round-trips through the function mini-language.
    virtual std::string spec_string() const = 0;

protected:
    virtual Rational eval_rational(const Rational& x) const = 0;
    virtual Rational eval_pi_rational(const mpz_class& p, const mpz_class& q) const;
    virtual bool supports_pi_points() const { return false; }
    virtual RangeResult range_impl(const Interval& I) const = 0;
};

using FuncModelPtr = std::shared_ptr<const FuncModel>;

/// Step function: constant on the open subintervals cut by interior
/// breakpoints; breakpoint values default to the left piece's value.
FuncModelPtr make_step(Interval domain, std::vector<Rational> breakpoints,
                       std::vector<Rational> values,
                       std::vector<std::optional<Rational>> breakpoint_values = {});
FuncModelPtr make_constant(Interval domain, Rational value);

struct PolyPiece {
    Interval sub;
    std::vector<Rational> coeffs; // c0 + c1 x + c2 x^2 + ...
};
FuncModelPtr make_polynomial(Interval domain, std::vector<Rational> coeffs);
FuncModelPtr make_piecewise_polynomial(std::vector<PolyPiece> pieces);

/// x |-> |x - center|.
FuncModelPtr make_abs_shift(Interval domain, Rational center);

/// Indicator of the fat Cantor limit set, seen through the depth-d cover:
/// point evaluation decides the cover, range and integral enclosures stay
/// sound for the limit-set indicator.
FuncModelPtr make_fat_cantor_indicator(FatCantorSpec spec, std::size_t depth);
FuncModelPtr make_fat_cantor_indicator(FatCantorSetPtr set);

/// The nowhere-continuous function on [0,1] with value 1/q at rationals p/q,
/// 1 - 1/q at pi-rationals pi*p/q, and 1/2 elsewhere. Restriction to a
/// subinterval of [0,1] keeps the same pointwise rules.
FuncModelPtr make_pathological();
FuncModelPtr make_pathological(Interval domain);

/// scale * f + offset.
FuncModelPtr make_affine_image(FuncModelPtr inner, Rational scale, Rational offset);

/// Contiguous concatenation of models; at shared boundaries the left part's
/// value wins.
FuncModelPtr make_glued(std::vector<FuncModelPtr> parts);

/// The depth-d cover of a fat Cantor set as an explicit step function
/// (indicator of a finite union of closed intervals). Exactly integrable.
FuncModelPtr make_fat_cantor_cover_step(const FatCantorSetPtr& set);

/**
 * Step functions expose their piece structure: several operations (exact
 * sublevel measures, witness selection) work on pieces directly.
 */
class StepFunction final : public FuncModel {
public:
    StepFunction(Interval domain, std::vector<Rational> breakpoints, std::vector<Rational> values,
                 std::vector<std::optional<Rational>> breakpoint_values);

    std::size_t piece_count() const { return values_.size(); }
    /// Closed span of piece i; the function holds value(i) on its interior.
    Interval piece_span(std::size_t i) const;
    const Rational& piece_value(std::size_t i) const { return values_[i]; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    /// Effective value at breakpoint i (explicit or left-limit default).
    Rational breakpoint_value(std::size_t i) const;
    bool has_explicit_breakpoint_values() const;

    Interval domain() const override { return domain_; }
    std::vector<Rational> split_points(const Interval& I) const override;
    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override;
    bool continuous_on_domain() const override;
    std::vector<Rational> discontinuity_points() const override;
    std::vector<Interval> zero_runs(const Interval& I) const override;
    std::optional<Rational> point_oscillation(const Rational& c) const override;
    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override;
    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override;
    std::string spec_string() const override;

protected:
    Rational eval_rational(const Rational& x) const override;
    RangeResult range_impl(const Interval& I) const override;

private:
    Rational exact_integral(const Interval& I) const;
    Interval domain_;
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
    std::vector<std::optional<Rational>> breakpoint_values_;
};

class AbsShiftFunction final : public FuncModel {
public:
    AbsShiftFunction(Interval domain, Rational center);

    const Rational& center() const { return center_; }

    Interval domain() const override { return domain_; }
    std::vector<Rational> split_points(const Interval& I) const override;
    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override;
    bool continuous_on_domain() const override { return true; }
    std::optional<Rational> point_oscillation(const Rational& c) const override;
    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override;
    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override;
    std::string spec_string() const override;

protected:
    Rational eval_rational(const Rational& x) const override;
    RangeResult range_impl(const Interval& I) const override;

private:
    Interval domain_;
    Rational center_;
};

/// Access helpers used by operations that are defined for one variant only;
/// null when the model is a different variant.
const StepFunction* as_step(const FuncModel& f);
const AbsShiftFunction* as_abs_shift(const FuncModel& f);

} // namespace certint
