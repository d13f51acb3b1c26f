#include "certint/suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "certint/indefinite.hpp"
#include "certint/mvt.hpp"

namespace certint {

FuncModelPtr random_step_function(SplitMix64& rng, std::size_t max_breakpoints) {
    const std::size_t nbp = 1 + rng.below(max_breakpoints);
    std::set<long> picks;
    while (picks.size() < nbp) picks.insert(rng.range(1, 996));
    std::vector<Rational> bps;
    for (long k : picks) bps.push_back(Rational(k, 997));
    std::vector<Rational> vals;
    for (std::size_t i = 0; i <= bps.size(); ++i) vals.push_back(rng.rational_in(-10, 10, 64));
    std::vector<std::optional<Rational>> at(bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i)
        if (rng.below(4) == 0) at[i] = rng.rational_in(-10, 10, 64);
    return make_step(Interval(Rational(0), Rational(1)), std::move(bps), std::move(vals),
                     std::move(at));
}

FuncModelPtr random_zero_step_function(SplitMix64& rng, std::size_t max_breakpoints) {
    const std::size_t nbp = 1 + rng.below(max_breakpoints);
    std::set<long> picks;
    while (picks.size() < nbp) picks.insert(rng.range(1, 996));
    std::vector<Rational> bps;
    for (long k : picks) bps.push_back(Rational(k, 997));
    std::vector<Rational> vals(bps.size() + 1, Rational(0));
    std::vector<std::optional<Rational>> at(bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
        Rational spike = rng.rational_in(-10, 10, 64);
        if (spike.is_zero()) spike = Rational(7);
        at[i] = spike;
    }
    return make_step(Interval(Rational(0), Rational(1)), std::move(bps), std::move(vals),
                     std::move(at));
}

std::vector<Interval> grid_cells(const Interval& I, std::size_t count) {
    std::vector<Interval> out;
    const Rational w = I.width();
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(Interval(
            I.lo() + w * Rational(static_cast<long>(i), static_cast<long>(count)),
            I.lo() + w * Rational(static_cast<long>(i + 1), static_cast<long>(count))));
    return out;
}

std::vector<Interval> kept_cover_probe_cells(const FatCantorSet& set, std::size_t count) {
    std::vector<Interval> out;
    const auto& kept = set.deepest().kept;
    for (std::size_t i = 0; i < kept.size() && out.size() < count; ++i) out.push_back(kept[i]);
    return out;
}

namespace suites {

bool SuiteResult::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
}

std::vector<std::string> names() {
    return {"constancy-ae", "dense-derivative", "mvt-riemann", "bounded-mvt", "counterexamples"};
}

namespace {

SuiteItem counted_item(const std::string& name, std::size_t ok, std::size_t total) {
    std::ostringstream os;
    os << ok << "/" << total;
    return SuiteItem{name, ok == total, os.str()};
}

SuiteResult run_constancy_ae(std::uint64_t seed, std::size_t family_size) {
    SuiteResult res{"constancy-ae", {}};
    SplitMix64 rng(seed);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < family_size; ++i) {
        const FuncModelPtr f = random_zero_step_function(rng);
        if (zero_step_constancy_check(*f, 64)) ++ok;
    }
    res.items.push_back(counted_item("zero-off-breakpoints step integrands stay constant", ok,
                                     family_size));
    bool guard_ok = false;
    try {
        zero_step_constancy_check(*make_step(Interval(Rational(0), Rational(1)), {Rational(1, 2)},
                                             {Rational(1), Rational(0)}, {}));
    } catch (const PreconditionError&) {
        guard_ok = true;
    }
    res.items.push_back(SuiteItem{"nonzero piece value rejected", guard_ok, ""});
    return res;
}

SuiteResult run_dense_derivative(std::uint64_t seed, std::size_t family_size) {
    SuiteResult res{"dense-derivative", {}};
    SplitMix64 rng(seed);
    const std::size_t n = std::max<std::size_t>(family_size / 5, 4);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const FuncModelPtr f = random_zero_step_function(rng);
        const IndefiniteIntegral F(f, Rational(0), rng.rational_in(-5, 5, 16));
        const auto rep = dense_zero_derivative_harness(F, grid_cells(f->domain(), 64), 200);
        if (rep.verdict == HarnessVerdict::ConstantCertified &&
            rep.exact_probes == rep.constancy_probes)
            ++ok;
    }
    res.items.push_back(counted_item("dense zero derivative + integrable => constant", ok, n));

    const FuncModelPtr chi =
        make_step(Interval(Rational(0), Rational(1)), {Rational(1, 2)}, {Rational(1), Rational(0)},
                  {});
    const IndefiniteIntegral Fchi(chi, Rational(0), Rational(0));
    const auto chi_rep = dense_zero_derivative_harness(Fchi, grid_cells(chi->domain(), 64), 100);
    res.items.push_back(SuiteItem{"half-indicator control refused",
                                  chi_rep.verdict == HarnessVerdict::DenseZerosNotFound, ""});

    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 8);
    const FuncModelPtr cantor = make_fat_cantor_indicator(set);
    const IndefiniteIntegral Fc(cantor, Rational(0), Rational(0));
    const auto c_rep = dense_zero_derivative_harness(Fc, kept_cover_probe_cells(*set, 16), 50);
    res.items.push_back(SuiteItem{"positive-measure cover control refused",
                                  c_rep.verdict == HarnessVerdict::DenseZerosNotFound, ""});
    return res;
}

SuiteResult run_mvt_riemann(std::uint64_t seed, std::size_t family_size) {
    SuiteResult res{"mvt-riemann", {}};
    SplitMix64 rng(seed);
    const Interval I(Rational(0), Rational(1));
    std::size_t witness_ok = 0, search_ok = 0, measures_ok = 0;
    for (std::size_t i = 0; i < family_size; ++i) {
        const FuncModelPtr f = random_step_function(rng);
        const MvtWitness w = inequality_witnesses(*f, I);
        if (verify_mvt_witness(*f, w)) ++witness_ok;

        const ContinuityWitness cw = find_continuity_point(*f, I, 20);
        bool good = verify_continuity_witness(*f, cw) && cw.trace &&
                    cw.trace->stages.size() == 20 && validate_trace(*f, I, *cw.trace);
        const auto bps = as_step(*f)->breakpoints();
        good = good && !std::binary_search(bps.begin(), bps.end(), cw.point);
        if (good) ++search_ok;

        const StepMeasureReport rep = step_sublevel_measures(*f, I);
        if (rep.sublevel_measure.sign() > 0 && rep.superlevel_measure.sign() > 0) ++measures_ok;
    }
    res.items.push_back(counted_item("inequality witness pairs re-verified", witness_ok,
                                     family_size));
    res.items.push_back(counted_item("20-stage continuity searches validated", search_ok,
                                     family_size));
    res.items.push_back(counted_item("sublevel and superlevel measures positive", measures_ok,
                                     family_size));
    return res;
}

SuiteResult run_bounded_mvt(std::uint64_t) {
    SuiteResult res{"bounded-mvt", {}};

    const FuncModelPtr patho = make_pathological();
    const MvtWitness pw = bounded_mean_inequality(*patho, patho->domain());
    res.items.push_back(SuiteItem{"nowhere-continuous integrand yields no upper witness",
                                  !pw.c2.has_value() && !pw.c1.has_value(), ""});

    const FuncModelPtr mixed = make_glued(
        {make_pathological(Interval(Rational(0), Rational(1, 2))),
         make_constant(Interval(Rational(1, 2), Rational(1)), Rational(1, 2))});
    const MvtWitness mw = bounded_mean_inequality(*mixed, mixed->domain());
    const bool mixed_ok = mw.c1.has_value() && mw.c2.has_value() &&
                          verify_mvt_witness(*mixed, mw) &&
                          mw.upper_integral == Interval(Rational(3, 4));
    res.items.push_back(SuiteItem{"glued model attains both Darboux bounds", mixed_ok, ""});

    const FuncModelPtr c5 = make_constant(Interval(Rational(0), Rational(2)), Rational(5));
    const MvtWitness cw = bounded_mean_inequality(*c5, c5->domain());
    res.items.push_back(SuiteItem{"constant model attains both bounds",
                                  cw.c1.has_value() && cw.c2.has_value() &&
                                      verify_mvt_witness(*c5, cw),
                                  ""});
    return res;
}

SuiteResult run_counterexamples(std::uint64_t) {
    SuiteResult res{"counterexamples", {}};

    const FuncModelPtr patho = make_pathological();
    const IntegralEnclosure enc =
        integrate(*patho, patho->domain(), Rational(1, 1000), 2048);
    res.items.push_back(SuiteItem{"pathological upper integral 1, lower 0, not certified",
                                  enc.lower_integral == Interval(Rational(0)) &&
                                      enc.upper_integral == Interval(Rational(1)) &&
                                      !enc.certified(),
                                  "gap " + enc.gap_upper_bound.str()});

    const FuncModelPtr vee = make_abs_shift(Interval(Rational(-1), Rational(1)), Rational(0));
    const EqualityWitnessDemo demo = no_equality_witness_demo(*vee);
    res.items.push_back(SuiteItem{"absolute-value demo has empty equality set",
                                  demo.applicable && demo.equality_set_empty &&
                                      demo.c1.has_value() && demo.c2.has_value(),
                                  ""});

    const CantorIndefinite F(FatCantorSpec(), 8);
    const auto rep = F.nonconstancy_report();
    res.items.push_back(SuiteItem{"positive-measure nowhere-dense set: nonconstant with dense zeros",
                                  rep.certified && rep.witness_count == 255 &&
                                      rep.f_at_one.contains(Rational(1, 2)),
                                  std::to_string(rep.witness_count) + " zero-derivative points"});
    return res;
}

} // namespace

SuiteResult run(const std::string& name, std::uint64_t seed, std::size_t family_size) {
    if (name == "constancy-ae") return run_constancy_ae(seed, family_size);
    if (name == "dense-derivative") return run_dense_derivative(seed, family_size);
    if (name == "mvt-riemann") return run_mvt_riemann(seed, family_size);
    if (name == "bounded-mvt") return run_bounded_mvt(seed);
    if (name == "counterexamples") return run_counterexamples(seed);
    throw ParseError("unknown verification suite '" + name + "'");
}

} // namespace suites

} // namespace certint
