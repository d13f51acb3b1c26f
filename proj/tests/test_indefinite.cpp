#include <doctest.h>

#include "certint/indefinite.hpp"
#include "certint/prng.hpp"
#include "certint/suites.hpp"

#include <atomic>
#include <thread>

using namespace certint;

namespace {

const Interval kUnit(Rational(0), Rational(1));

FuncModelPtr closed_half_indicator() {
    // 1 on [0,1/2], 0 after.
    return make_step(kUnit, {Rational(1, 2)}, {Rational(1), Rational(0)}, {Rational(1)});
}

} // namespace

TEST_CASE("indefinite evaluation") {
    const IndefiniteIntegral F(closed_half_indicator(), Rational(0), Rational(3));
    CHECK(F.eval(Rational(1)) == Interval(Rational(7, 2)));
    CHECK(F.eval(Rational(0)) == Interval(Rational(3)));
    CHECK(F.eval(Rational(1, 4)) == Interval(Rational(13, 4)));

    const IndefiniteIntegral Fc(make_fat_cantor_indicator(FatCantorSpec(), 8), Rational(0),
                                Rational(0));
    const Interval v = Fc.eval(Rational(1));
    CHECK(v.contains(Rational(1, 2)));
    CHECK(v.width() <= Rational::pow2(-9));

    // Orientation below the base point: F(x) = c - integral over [x, base].
    const IndefiniteIntegral Fb(closed_half_indicator(), Rational(1, 2), Rational(0));
    CHECK(Fb.eval(Rational(0)) == Interval(Rational(-1, 2)));
}

TEST_CASE("indefinite evaluation agrees with the direct cover construction") {
    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 6);
    const IndefiniteIntegral F(make_fat_cantor_indicator(set), Rational(0), Rational(0));
    const CantorIndefinite G(set);
    for (long k = 0; k <= 16; ++k) {
        const Rational x(k, 16);
        CHECK(F.eval(x) == G.eval(x));
    }
}

TEST_CASE("additivity for step integrands") {
    SplitMix64 rng(77);
    for (int t = 0; t < 100; ++t) {
        const FuncModelPtr f = random_step_function(rng, 12);
        const IndefiniteIntegral F(f, Rational(0), rng.rational_in(-3, 3, 8));
        Rational a(rng.range(0, 63), 64), b(rng.range(0, 63), 64);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        const Interval diff = sub(F.eval(b), F.eval(a));
        REQUIRE(diff.is_degenerate());
        const IntegralEnclosure enc = integrate(*f, Interval(a, b), Rational(0));
        CHECK(diff == enc.lower_integral);
    }
}

TEST_CASE("derivative enclosures on the worked examples") {
    const IndefiniteIntegral F(closed_half_indicator(), Rational(0), Rational(0));
    const DerivativeEnclosure d1 = derivative_enclosure(F, Rational(3, 4), {Rational(1, 8)});
    CHECK(d1.zero_certified);
    CHECK(d1.quotient_enclosures[0] == Interval(Rational(0)));

    const IndefiniteIntegral Fx(make_polynomial(kUnit, {Rational(0), Rational(1)}), Rational(0),
                                Rational(0));
    const DerivativeEnclosure d2 = derivative_enclosure(Fx, Rational(1, 2), {Rational(1, 8)});
    CHECK(d2.quotient_enclosures[0] == Interval(Rational(3, 8), Rational(5, 8)));
    CHECK(d2.quotient_enclosures[0].contains(Rational(1, 2)));
    CHECK(!d2.zero_certified);

    const IndefiniteIntegral Fc(make_fat_cantor_indicator(FatCantorSpec(), 4), Rational(0),
                                Rational(0));
    const DerivativeEnclosure d3 = derivative_enclosure(Fc, Rational(1, 2), {Rational(1, 16)});
    CHECK(d3.zero_certified);

    CHECK_THROWS_AS(derivative_enclosure(F, Rational(0), {Rational(1, 8)}), OutOfDomainError);
    CHECK_THROWS_AS(derivative_enclosure(F, Rational(1, 2), {Rational(1, 8), Rational(1, 4)}),
                    PreconditionError);
}

TEST_CASE("derivative enclosures contain the symbolic derivative of polynomials") {
    SplitMix64 rng(78);
    // F(x) = x^3/3 has integrand x^2; check the quotient enclosures contain
    // the symbolic value at 100 random interior points.
    const FuncModelPtr sq = make_polynomial(kUnit, {Rational(0), Rational(0), Rational(1)});
    const IndefiniteIntegral F(sq, Rational(0), Rational(0));
    for (int i = 0; i < 100; ++i) {
        const Rational z(rng.range(1, 255), 256);
        const DerivativeEnclosure d = derivative_enclosure(F, z, {Rational(1, 512)});
        CHECK(d.quotient_enclosures[0].contains(z * z));
    }
}

TEST_CASE("dense-zero-derivative harness verdicts") {
    SplitMix64 rng(79);
    const FuncModelPtr zf = random_zero_step_function(rng, 20);
    const IndefiniteIntegral Fz(zf, Rational(0), Rational(5, 7));
    const HarnessReport ok = dense_zero_derivative_harness(Fz, grid_cells(kUnit, 64), 200);
    CHECK(ok.verdict == HarnessVerdict::ConstantCertified);
    CHECK(ok.cells_with_zero == 64);
    CHECK(ok.integrable_certified);
    CHECK(ok.exact_probes == ok.constancy_probes);

    const IndefiniteIntegral Fchi(closed_half_indicator(), Rational(0), Rational(0));
    CHECK(dense_zero_derivative_harness(Fchi, grid_cells(kUnit, 64), 50).verdict ==
          HarnessVerdict::DenseZerosNotFound);

    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 8);
    const IndefiniteIntegral Fc(make_fat_cantor_indicator(set), Rational(0), Rational(0));
    const HarnessReport refused =
        dense_zero_derivative_harness(Fc, kept_cover_probe_cells(*set, 16), 50);
    CHECK(refused.verdict == HarnessVerdict::DenseZerosNotFound);
    CHECK(refused.cells_with_zero == 0);
}

TEST_CASE("subdivision-variation sums for the square") {
    const FuncModelPtr sq = make_polynomial(kUnit, {Rational(0), Rational(0), Rational(1)});
    const ModelEvaluator F(sq);
    CHECK(thomson_midpoint(F, Partition::uniform(kUnit, 4)).sum_value == Rational(1, 4));
    CHECK(thomson_midpoint(F, Partition::uniform(kUnit, 16)).sum_value == Rational(1, 16));
    CHECK(thomson_midpoint(F, Partition::uniform(kUnit, 64)).sum_value == Rational(1, 64));
}

TEST_CASE("linear functions have vanishing variation sums for every tag choice") {
    const FuncModelPtr lin =
        make_polynomial(Interval(Rational(-1), Rational(2)), {Rational(3), Rational(-2)});
    const ModelEvaluator F(lin);
    const Partition P({Rational(-1), Rational(-1, 4), Rational(1, 3), Rational(2)});
    CHECK(thomson_midpoint(F, P).sum_value == Rational(0));
    const std::vector<TagPair> tags{{Rational(-1, 2), Rational(-1, 3)},
                                    {Rational(0), Rational(1, 4)},
                                    {Rational(1), Rational(3, 2)}};
    CHECK(thomson_sum(F, P, tags).sum_value == Rational(0));
    CHECK(thomson_adversarial(F, P, default_tag_candidates(lin.get(), P)).sum_value ==
          Rational(0));
}

TEST_CASE("variation sums of step indefinite integrals vanish on aligned subdivisions") {
    const FuncModelPtr f =
        make_step(kUnit, {Rational(1, 3), Rational(2, 3)},
                  {Rational(2), Rational(-1), Rational(5)}, {});
    const IndefiniteIntegral F(f, Rational(0), Rational(0));
    const IndefiniteEvaluator E(F);
    const Partition P({Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)});
    CHECK(thomson_midpoint(E, P).sum_value == Rational(0));

    // Refining uniform meshes: once the mesh separates breakpoints, the
    // midpoint-tag sum cannot increase.
    Rational prev(-1);
    for (std::size_t n : {6u, 12u, 24u, 48u}) {
        const Rational s = thomson_midpoint(E, Partition::uniform(kUnit, n)).sum_value;
        if (prev.sign() >= 0) CHECK(s <= prev);
        prev = s;
    }
}

TEST_CASE("adversarial sums dominate midpoint sums") {
    const FuncModelPtr sq = make_polynomial(kUnit, {Rational(0), Rational(0), Rational(1)});
    const ModelEvaluator F(sq);
    const Partition P = Partition::uniform(kUnit, 8);
    const Rational mid = thomson_midpoint(F, P).sum_value;
    const Rational adv = thomson_adversarial(F, P, default_tag_candidates(sq.get(), P)).sum_value;
    CHECK(mid <= adv);
    // Derived bound: each cell term is at most 2 * mesh * width.
    CHECK(adv <= Rational(2) * P.mesh());
}

TEST_CASE("non-exact enclosures are rejected by the exact evaluator") {
    const IndefiniteIntegral Fc(make_fat_cantor_indicator(FatCantorSpec(), 4), Rational(0),
                                Rational(0));
    const IndefiniteEvaluator E(Fc);
    CHECK_THROWS_AS(E(Rational(1)), NonExactEvaluationError);

    TableEvaluator T({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
    CHECK(T(Rational(1)) == Rational(1));
    CHECK_THROWS_AS(T(Rational(1, 2)), NonExactEvaluationError);
}

TEST_CASE("tag validity is enforced") {
    const FuncModelPtr lin = make_polynomial(kUnit, {Rational(0), Rational(1)});
    const ModelEvaluator F(lin);
    const Partition P({Rational(0), Rational(1)});
    CHECK_THROWS_AS(thomson_sum(F, P, {TagPair{Rational(0), Rational(1, 2)}}),
                    PreconditionError);
    CHECK_THROWS_AS(thomson_sum(F, P, {TagPair{Rational(3, 4), Rational(1, 4)}}),
                    PreconditionError);
    CHECK_THROWS_AS(thomson_sum(F, P, {}), PreconditionError);
}

TEST_CASE("integrable-but-uncertifiable probes make the harness inapplicable") {
    // Uniform grid cells over the cover DO contain removed intervals, so
    // zeros are found everywhere; integrability still cannot be certified.
    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 8);
    const IndefiniteIntegral Fc(make_fat_cantor_indicator(set), Rational(0), Rational(0));
    const HarnessReport rep = dense_zero_derivative_harness(Fc, grid_cells(kUnit, 16), 50);
    CHECK(rep.verdict == HarnessVerdict::Inapplicable);
    CHECK(rep.cells_with_zero == 16);
    CHECK(!rep.integrable_certified);
}

namespace {

/// Exact partial Takagi sums at dyadic points: nowhere-differentiable, so
/// its difference quotients keep fighting at every scale.
Rational takagi_sample(const Rational& x, int terms) {
    Rational acc(0), scale(1);
    for (int n = 0; n < terms; ++n) {
        Rational y = x / scale; // 2^n x
        // distance to the nearest integer
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), y.num().get_mpz_t(), y.den().get_mpz_t());
        const Rational frac = y - Rational(fl, mpz_class(1));
        const Rational dist = min(frac, Rational(1) - frac);
        acc += dist * scale;
        scale /= Rational(2);
    }
    return acc;
}

} // namespace

TEST_CASE("variation-sum schedules classify the evidence") {
    const FuncModelPtr sq = make_polynomial(kUnit, {Rational(0), Rational(0), Rational(1)});
    const ModelEvaluator Esq(sq);
    const ThomsonScheduleReport consistent = thomson_schedule(Esq, kUnit, sq.get(), 5);
    CHECK(consistent.verdict == ThomsonVerdict::ConsistentWithIndefinite);
    CHECK(consistent.levels.size() == 5);

    const FuncModelPtr f =
        make_step(kUnit, {Rational(1, 3)}, {Rational(2), Rational(-1)}, {});
    const IndefiniteIntegral F(f, Rational(0), Rational(0));
    const IndefiniteEvaluator Ef(F);
    CHECK(thomson_schedule(Ef, kUnit, f.get(), 5).verdict ==
          ThomsonVerdict::ConsistentWithIndefinite);

    // A table of exact samples of a nowhere-differentiable function: the
    // adversarial sums refuse to decay.
    std::map<Rational, Rational> samples;
    for (long k = 0; k <= 1024; ++k)
        samples[Rational(k, 1024)] = takagi_sample(Rational(k, 1024), 10);
    const TableEvaluator T(std::move(samples));
    const ThomsonScheduleReport rough = thomson_schedule(T, kUnit, nullptr, 5);
    CHECK(rough.verdict == ThomsonVerdict::InconsistentEvidence);
}

TEST_CASE("models and indefinite integrals are safe to share across threads") {
    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 6);
    const FuncModelPtr f = make_fat_cantor_indicator(set);
    const IndefiniteIntegral F(f, Rational(0), Rational(0));
    const Interval probe(Rational(1, 3), Rational(2, 3));

    const Interval expect_eval = F.eval(Rational(1, 3));
    const RangeResult expect_range = f->range(probe);

    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&]() {
            for (int i = 0; i < 50; ++i) {
                if (!(F.eval(Rational(1, 3)) == expect_eval)) ++mismatches;
                const RangeResult r = f->range(probe);
                if (!(r.bounds == expect_range.bounds) || r.exact != expect_range.exact)
                    ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches.load() == 0);
}
