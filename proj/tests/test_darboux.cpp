#include <doctest.h>

#include "certint/darboux.hpp"
#include "certint/prng.hpp"
#include "certint/suites.hpp"

using namespace certint;

namespace {

const Interval kUnit(Rational(0), Rational(1));

FuncModelPtr half_indicator_at0() {
    return make_step(kUnit, {Rational(1, 2)}, {Rational(1), Rational(0)}, {Rational(0)});
}

/// Independent oracle: telescoped sum of value * piece length over I.
Rational telescoped_step_integral(const StepFunction& s, const Interval& I) {
    Rational total(0);
    for (std::size_t i = 0; i < s.piece_count(); ++i) {
        const Interval span = s.piece_span(i);
        const Rational lo = max(span.lo(), I.lo()), hi = min(span.hi(), I.hi());
        if (lo < hi) total += s.piece_value(i) * (hi - lo);
    }
    return total;
}

} // namespace

TEST_CASE("partition invariants") {
    CHECK_THROWS_AS(Partition({Rational(0)}), Error);
    CHECK_THROWS_AS(Partition({Rational(0), Rational(0)}), Error);
    CHECK_THROWS_AS(Partition({Rational(0), Rational(2), Rational(1)}), Error);
    const Partition P({Rational(0), Rational(1, 4), Rational(1)});
    CHECK(P.mesh() == Rational(3, 4));
    CHECK(P.refined_with(Rational(1, 2)).cell_count() == 3);
    CHECK(P.refined_with(Rational(1, 4)).cell_count() == 2);
    CHECK(Partition::uniform(kUnit, 4).mesh() == Rational(1, 4));
}

TEST_CASE("darboux sums on the worked examples") {
    const Partition P({Rational(0), Rational(1, 2), Rational(1)});

    const FuncModelPtr id = make_polynomial(kUnit, {Rational(0), Rational(1)});
    const DarbouxSums s1 = darboux_sums(*id, P);
    CHECK(s1.upper == Rational(3, 4));
    CHECK(s1.lower == Rational(1, 4));
    CHECK(s1.upper_exact);

    // Hand-enumerated cell bounds: value 1 on [0,1/2), point value 0 at 1/2.
    // Cell [0,1/2]: inf 0 (attained at 1/2), sup 1. Cell [1/2,1]: constant 0.
    const DarbouxSums s2 = darboux_sums(*half_indicator_at0(), P);
    CHECK(s2.upper == Rational(1, 2));
    CHECK(s2.lower == Rational(0));

    const FuncModelPtr c5 = make_constant(Interval(Rational(0), Rational(2)), Rational(5));
    const DarbouxSums s3 = darboux_sums(*c5, Partition({Rational(0), Rational(1, 3), Rational(2)}));
    CHECK(s3.upper == Rational(10));
    CHECK(s3.lower == Rational(10));
}

TEST_CASE("refining a partition never worsens the sums") {
    SplitMix64 rng(55);
    for (int t = 0; t < 25; ++t) {
        const FuncModelPtr f = random_step_function(rng, 12);
        std::vector<Rational> pts{Rational(0), Rational(1)};
        for (int k = 0; k < 3; ++k) {
            const Rational x = Rational(rng.range(1, 63), 64);
            pts.push_back(x);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const Partition P(pts);
        const DarbouxSums before = darboux_sums(*f, P);
        const Rational extra = Rational(rng.range(1, 127), 128);
        const Partition Q = P.refined_with(extra);
        const DarbouxSums after = darboux_sums(*f, Q);
        CHECK(after.upper <= before.upper);
        CHECK(after.lower >= before.lower);
    }
}

TEST_CASE("gap identity: U - L equals the oscillation mass") {
    SplitMix64 rng(56);
    for (int t = 0; t < 10; ++t) {
        const FuncModelPtr f = random_step_function(rng, 10);
        const Partition P = Partition::uniform(kUnit, 8);
        const DarbouxSums s = darboux_sums(*f, P);
        Rational osc_mass(0);
        for (std::size_t i = 0; i < P.cell_count(); ++i) {
            const RangeResult r = f->range(P.cell(i));
            osc_mass += (r.bounds.hi() - r.bounds.lo()) * P.cell(i).width();
        }
        CHECK(s.upper - s.lower == osc_mass);
    }
}

TEST_CASE("integrate certifies step functions exactly") {
    const IntegralEnclosure enc = integrate(*half_indicator_at0(), kUnit, Rational(0));
    CHECK(enc.certified());
    CHECK(enc.lower_integral == Interval(Rational(1, 2)));
    CHECK(enc.upper_integral == Interval(Rational(1, 2)));
    CHECK(enc.gap_upper_bound == Rational(0));

    SplitMix64 rng(57);
    for (int t = 0; t < 20; ++t) {
        const FuncModelPtr f = random_step_function(rng, 20);
        const IntegralEnclosure e = integrate(*f, kUnit, Rational(0));
        CHECK(e.certified());
        const Rational expect = telescoped_step_integral(*as_step(*f), kUnit);
        CHECK(e.lower_integral == Interval(expect));
        CHECK(e.upper_integral == Interval(expect));
    }
}

TEST_CASE("integrate reports the persistent gap of the cover indicator") {
    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 8);
    const FuncModelPtr f = make_fat_cantor_indicator(set);
    const IntegralEnclosure enc = integrate(*f, kUnit, Rational(1, 1000), 1 << 10);
    CHECK(!enc.certified());
    CHECK(enc.lower_integral == Interval(Rational(0)));
    // Upper integral enclosure [1/2, 1/2 + 1/512].
    CHECK(enc.upper_integral == Interval(Rational(1, 2), Rational(257, 512)));
}

TEST_CASE("integrate is honest about the nowhere-continuous function") {
    const FuncModelPtr f = make_pathological();
    for (std::size_t budget : {16u, 256u, 10000u}) {
        const IntegralEnclosure enc = integrate(*f, kUnit, Rational(0), budget);
        CHECK(!enc.certified());
        CHECK(enc.lower_integral == Interval(Rational(0)));
        CHECK(enc.upper_integral == Interval(Rational(1)));
        CHECK(enc.sums.upper == Rational(1));
        CHECK(enc.sums.lower == Rational(0));
        CHECK(enc.gap_upper_bound == Rational(1));
    }
}

TEST_CASE("enclosures stay ordered") {
    SplitMix64 rng(58);
    for (int t = 0; t < 10; ++t) {
        const FuncModelPtr f = random_step_function(rng, 15);
        for (std::size_t budget : {4u, 16u, 64u}) {
            const IntegralEnclosure enc = integrate(*f, kUnit, Rational(0), budget);
            CHECK(enc.lower_integral.lo() <= enc.upper_integral.hi());
        }
    }
}

TEST_CASE("global bounds check") {
    const FuncModelPtr c5 = make_constant(Interval(Rational(0), Rational(2)), Rational(5));
    CHECK(global_bounds_check(*c5, c5->domain(),
                              integrate(*c5, c5->domain(), Rational(0))));

    const FuncModelPtr patho = make_pathological();
    CHECK(global_bounds_check(*patho, kUnit, integrate(*patho, kUnit, Rational(0), 64)));

    const FuncModelPtr id = make_polynomial(kUnit, {Rational(0), Rational(1)});
    CHECK(global_bounds_check(*id, kUnit, integrate(*id, kUnit, Rational(0))));

    // Inexact global range: strictly inside a kept interval, no endpoint.
    const FuncModelPtr fc = make_fat_cantor_indicator(FatCantorSpec(), 3);
    const Interval inside(Rational(1, 100), Rational(2, 100));
    CHECK_THROWS_AS(global_bounds_check(*fc, inside, integrate(*fc, inside, Rational(0), 32)),
                    RangeNotExactError);
}

TEST_CASE("integrate preconditions") {
    const FuncModelPtr f = half_indicator_at0();
    CHECK_THROWS_AS(integrate(*f, Interval(Rational(1, 2)), Rational(0)), PreconditionError);
    CHECK_THROWS_AS(integrate(*f, kUnit, Rational(-1)), PreconditionError);
    CHECK_THROWS_AS(integrate(*f, Interval(Rational(0), Rational(2)), Rational(0)),
                    OutOfDomainError);
}

TEST_CASE("polynomial integrals agree with a Darboux squeeze") {
    // Dual route: the exact enclosure must sit between the lower and upper
    // sums of a fine uniform partition, computed without the model's
    // integral hook.
    SplitMix64 rng(60);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> coeffs;
        const int deg = static_cast<int>(rng.below(4));
        for (int k = 0; k <= deg; ++k) coeffs.push_back(rng.rational_in(-5, 5, 16));
        const FuncModelPtr p = make_polynomial(kUnit, coeffs);
        const IntegralEnclosure enc = integrate(*p, kUnit, Rational(0));
        REQUIRE(enc.certified());
        const DarbouxSums squeeze = darboux_sums(*p, Partition::uniform(kUnit, 256));
        CHECK(squeeze.lower <= enc.lower_integral.lo());
        CHECK(enc.upper_integral.hi() <= squeeze.upper);
    }
}

TEST_CASE("composite-model enclosures agree with a hook-free Darboux squeeze") {
    // Affine images and glued models get their integral bounds from
    // composition; cross-check against plain sums over fine partitions.
    const FuncModelPtr mixed =
        make_glued({make_pathological(Interval(Rational(0), Rational(1, 2))),
                    make_constant(Interval(Rational(1, 2), Rational(1)), Rational(1, 2))});
    const IntegralEnclosure em = integrate(*mixed, kUnit, Rational(0), 256);
    CHECK(em.lower_integral == Interval(Rational(1, 4)));
    CHECK(em.upper_integral == Interval(Rational(3, 4)));
    const DarbouxSums sm = darboux_sums(*mixed, Partition::uniform(kUnit, 128));
    CHECK(sm.lower <= em.lower_integral.lo());
    CHECK(em.upper_integral.hi() <= sm.upper);

    const FuncModelPtr flipped = make_affine_image(mixed, Rational(-2), Rational(1));
    const IntegralEnclosure ef = integrate(*flipped, kUnit, Rational(0), 256);
    // scale -2, offset 1: lower integral = -2 * (upper of inner) + 1 = -1/2.
    CHECK(ef.lower_integral == Interval(Rational(-1, 2)));
    CHECK(ef.upper_integral == Interval(Rational(1, 2)));
    const DarbouxSums sf = darboux_sums(*flipped, Partition::uniform(kUnit, 128));
    CHECK(sf.lower <= ef.lower_integral.lo());
    CHECK(ef.upper_integral.hi() <= sf.upper);
}
