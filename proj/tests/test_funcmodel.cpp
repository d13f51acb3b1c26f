#include <doctest.h>

#include "certint/fnspec.hpp"
#include "certint/funcmodel.hpp"
#include "certint/prng.hpp"

using namespace certint;

namespace {

Rational sample_in(SplitMix64& rng, const Interval& I) {
    const long den = rng.range(1, 512);
    return I.lo() + I.width() * Rational(rng.range(0, den), den);
}

FuncModelPtr half_indicator() {
    // 1 on [0,1/2), 0 from 1/2 on (explicit breakpoint value 0).
    return make_step(Interval(Rational(0), Rational(1)), {Rational(1, 2)},
                     {Rational(1), Rational(0)}, {Rational(0)});
}

} // namespace

TEST_CASE("pi-rational points are normalized and guarded") {
    const Point p = Point::pi_rational(2, 8);
    CHECK(p.pi_num() == 1);
    CHECK(p.pi_den() == 4);
    CHECK(p.str() == "pi*1/4");
    CHECK_THROWS_AS(Point::pi_rational(0, 3), Error);
    CHECK_THROWS_AS(Point::pi_rational(1, 0), Error);
}

TEST_CASE("pathological model evaluates by reduced denominator") {
    const FuncModelPtr f = make_pathological();
    CHECK(f->eval(Point::rational(Rational(1, 3))) == Rational(1, 3));
    CHECK(f->eval(Point::pi_rational(1, 4)) == Rational(3, 4));
    CHECK(f->eval(Point::rational(Rational(3, 7))) == Rational(1, 7));
    // Integer points sit outside the positive-numerator enumeration.
    CHECK(f->eval(Point::rational(Rational(0))) == Rational(1, 2));
    CHECK(f->eval(Point::rational(Rational(1))) == Rational(1, 2));
    // pi/2 > 1 is outside the domain; pi-rationals elsewhere are rejected.
    CHECK_THROWS_AS(f->eval(Point::pi_rational(1, 2)), OutOfDomainError);
    CHECK_THROWS_AS(half_indicator()->eval(Point::pi_rational(1, 4)),
                    UnsupportedPointKindError);
}

TEST_CASE("pathological values stay strictly between 0 and 1") {
    const FuncModelPtr f = make_pathological();
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = sample_in(rng, f->domain());
        const Rational v = f->eval(Point::rational(x));
        CHECK(Rational(0) < v);
        CHECK(v < Rational(1));
    }
    const RangeResult r = f->range(Interval(Rational(1, 3), Rational(1, 2)));
    CHECK(r.bounds == Interval(Rational(0), Rational(1)));
    CHECK(r.exact);
}

TEST_CASE("step evaluation and ranges") {
    const FuncModelPtr f = half_indicator();
    CHECK(f->eval(Point::rational(Rational(1, 4))) == Rational(1));
    CHECK(f->eval(Point::rational(Rational(1, 2))) == Rational(0));
    CHECK(f->eval(Point::rational(Rational(3, 4))) == Rational(0));
    CHECK(f->eval(Point::rational(Rational(0))) == Rational(1));

    const RangeResult r = f->range(Interval(Rational(1, 4), Rational(3, 4)));
    CHECK(r.bounds == Interval(Rational(0), Rational(1)));
    CHECK(r.exact);
    // Inside one piece the range is a point.
    const RangeResult r2 = f->range(Interval(Rational(1, 8), Rational(3, 8)));
    CHECK(r2.bounds == Interval(Rational(1), Rational(1)));

    // Default breakpoint value is the left-limit value.
    const FuncModelPtr g = make_step(Interval(Rational(0), Rational(1)), {Rational(1, 2)},
                                     {Rational(1), Rational(0)}, {});
    CHECK(g->eval(Point::rational(Rational(1, 2))) == Rational(1));
}

TEST_CASE("abs-shift evaluation and ranges") {
    const FuncModelPtr f = make_abs_shift(Interval(Rational(-1), Rational(1)), Rational(0));
    CHECK(f->eval(Point::rational(Rational(-1, 2))) == Rational(1, 2));
    const RangeResult r = f->range(Interval(Rational(-1, 2), Rational(1)));
    CHECK(r.bounds == Interval(Rational(0), Rational(1)));
    CHECK(r.exact);
    const RangeResult r2 = f->range(Interval(Rational(1, 4), Rational(1, 2)));
    CHECK(r2.bounds == Interval(Rational(1, 4), Rational(1, 2)));
}

TEST_CASE("polynomial ranges are exact via critical points") {
    const FuncModelPtr sq = make_polynomial(Interval(Rational(0), Rational(2)),
                                            {Rational(0), Rational(0), Rational(1)});
    const RangeResult r = sq->range(Interval(Rational(1), Rational(2)));
    CHECK(r.bounds == Interval(Rational(1), Rational(4)));
    CHECK(r.exact);

    // Interior minimum: (x - 1/2)^2 on [0,1].
    const FuncModelPtr v = make_polynomial(Interval(Rational(0), Rational(1)),
                                           {Rational(1, 4), Rational(-1), Rational(1)});
    const RangeResult rv = v->range(Interval(Rational(0), Rational(1)));
    CHECK(rv.bounds == Interval(Rational(0), Rational(1, 4)));
    CHECK(rv.exact);

    // Cubic with rational critical points: x^3 - 3x on [-2, 2].
    const FuncModelPtr c = make_polynomial(Interval(Rational(-2), Rational(2)),
                                           {Rational(0), Rational(-3), Rational(0), Rational(1)});
    const RangeResult rc = c->range(Interval(Rational(-2), Rational(2)));
    CHECK(rc.bounds == Interval(Rational(-2), Rational(2)));
    CHECK(rc.exact);
}

TEST_CASE("fat cantor indicator ranges are cover-driven") {
    const auto set = std::make_shared<FatCantorSet>(FatCantorSpec(), 4);
    const FuncModelPtr f = make_fat_cantor_indicator(set);
    // Inside the first removed interval (3/8, 5/8).
    const RangeResult gone = f->range(Interval(Rational(2, 5), Rational(3, 5)));
    CHECK(gone.bounds == Interval(Rational(0), Rational(0)));
    CHECK(gone.exact);
    // The whole domain attains both values (0 is an endpoint of the cover).
    const RangeResult all = f->range(Interval(Rational(0), Rational(1)));
    CHECK(all.bounds == Interval(Rational(0), Rational(1)));
    CHECK(all.exact);
    // Kept endpoints survive forever; removed midpoints are out.
    CHECK(f->eval(Point::rational(Rational(3, 8))) == Rational(1));
    CHECK(f->eval(Point::rational(Rational(1, 2))) == Rational(0));
}

TEST_CASE("fat cantor covers shrink with depth") {
    const FatCantorSpec spec;
    for (std::size_t d = 1; d <= 6; ++d) {
        const FatCantorSet fine(spec, d + 1), coarse(spec, d);
        for (const Interval& iv : fine.deepest().kept) {
            bool inside = false;
            for (const Interval& big : coarse.deepest().kept)
                if (big.contains(iv)) { inside = true; break; }
            CHECK(inside);
        }
    }
    // Range enclosures never widen as depth increases.
    const Interval probe(Rational(3, 8), Rational(2, 5));
    const FuncModelPtr f4 = make_fat_cantor_indicator(spec, 4);
    const FuncModelPtr f8 = make_fat_cantor_indicator(spec, 8);
    CHECK(f4->range(probe).bounds.contains(f8->range(probe).bounds));
}

TEST_CASE("affine image coherence") {
    SplitMix64 rng(11);
    const std::vector<FuncModelPtr> inners = {
        half_indicator(),
        make_polynomial(Interval(Rational(0), Rational(1)), {Rational(0), Rational(0), Rational(1)}),
        make_abs_shift(Interval(Rational(0), Rational(1)), Rational(1, 3)),
    };
    for (const auto& inner : inners) {
        for (int t = 0; t < 10; ++t) {
            Rational s = rng.rational_in(-4, 4, 8);
            const Rational o = rng.rational_in(-4, 4, 8);
            const FuncModelPtr g = make_affine_image(inner, s, o);
            const Rational a = sample_in(rng, inner->domain());
            const Rational b = sample_in(rng, inner->domain());
            const Interval I(min(a, b), max(a, b));
            const RangeResult ri = inner->range(I);
            const RangeResult rg = g->range(I);
            const Rational lo = s * ri.bounds.lo() + o, hi = s * ri.bounds.hi() + o;
            CHECK(rg.bounds == Interval(min(lo, hi), max(lo, hi)));
            CHECK(rg.exact == ri.exact);
            const Rational x = sample_in(rng, I);
            CHECK(g->eval(Point::rational(x)) == s * inner->eval(Point::rational(x)) + o);
        }
    }
}

TEST_CASE("glued model uses the left part at shared boundaries") {
    const FuncModelPtr g = make_glued({
        make_constant(Interval(Rational(0), Rational(1, 2)), Rational(2)),
        make_constant(Interval(Rational(1, 2), Rational(1)), Rational(5)),
    });
    CHECK(g->eval(Point::rational(Rational(1, 2))) == Rational(2));
    CHECK(g->range(Interval(Rational(0), Rational(1))).bounds ==
          Interval(Rational(2), Rational(5)));
    CHECK_THROWS_AS(make_glued({make_constant(Interval(Rational(0), Rational(1, 3)), Rational(1)),
                                make_constant(Interval(Rational(1, 2), Rational(1)), Rational(1))}),
                    Error);
}

TEST_CASE("eval stays inside the range enclosure on every model") {
    SplitMix64 rng(2024);
    std::vector<FuncModelPtr> models = {
        half_indicator(),
        make_step(Interval(Rational(0), Rational(1)), {Rational(1, 3), Rational(2, 3)},
                  {Rational(-2), Rational(7), Rational(1, 2)}, {std::nullopt, Rational(9)}),
        make_polynomial(Interval(Rational(-1), Rational(1)),
                        {Rational(1, 4), Rational(-1), Rational(1)}),
        make_abs_shift(Interval(Rational(-1), Rational(1)), Rational(1, 7)),
        make_pathological(),
        make_fat_cantor_indicator(FatCantorSpec(), 6),
        make_affine_image(make_pathological(), Rational(-3), Rational(2)),
        make_glued({make_pathological(Interval(Rational(0), Rational(1, 2))),
                    make_constant(Interval(Rational(1, 2), Rational(1)), Rational(1, 2))}),
    };
    for (const auto& f : models) {
        const Interval dom = f->domain();
        for (int k = 0; k < 8; ++k) {
            const Rational a = sample_in(rng, dom), b = sample_in(rng, dom);
            if (a == b) continue;
            const Interval I(min(a, b), max(a, b));
            const RangeResult r = f->range(I);
            for (int i = 0; i < 125; ++i) {
                const Rational x = sample_in(rng, I);
                CHECK(r.bounds.contains(f->eval(Point::rational(x))));
            }
        }
    }
}

TEST_CASE("witness points above and below thresholds") {
    const FuncModelPtr patho = make_pathological();
    const Interval I(Rational(0), Rational(1));
    const auto p = patho->find_point_above(I, Rational(3, 4), true);
    REQUIRE(p.has_value());
    CHECK(p->kind() == Point::Kind::PiRational);
    CHECK(p->pi_den() >= 5);
    CHECK(patho->eval(*p) > Rational(3, 4));

    const auto chi = half_indicator();
    const auto q = chi->find_point_above(I, Rational(1, 2), true);
    REQUIRE(q.has_value());
    CHECK(q->rat() < Rational(1, 2));
    CHECK(chi->eval(*q) == Rational(1));

    const auto zero = make_constant(I, Rational(0));
    CHECK(!zero->find_point_above(I, Rational(1, 2), true).has_value());

    // Upper bound 1 is never attained by the pathological model.
    CHECK(!patho->find_point_above(I, Rational(1), false).has_value());
    const auto below = patho->find_point_below(I, Rational(1, 4), false);
    REQUIRE(below.has_value());
    CHECK(patho->eval(*below) <= Rational(1, 4));
}

TEST_CASE("spec strings round-trip through the parser") {
    const std::vector<FuncModelPtr> models = {
        half_indicator(),
        make_polynomial(Interval(Rational(0), Rational(1)), {Rational(0), Rational(0), Rational(1)}),
        make_abs_shift(Interval(Rational(-1), Rational(1)), Rational(0)),
        make_pathological(),
        make_pathological(Interval(Rational(0), Rational(1, 2))),
        make_fat_cantor_indicator(FatCantorSpec(), 5),
        make_fat_cantor_indicator(FatCantorSpec(Rational(1, 9)), 3),
        make_affine_image(make_pathological(), Rational(-3), Rational(2)),
        make_glued({make_pathological(Interval(Rational(0), Rational(1, 2))),
                    make_constant(Interval(Rational(1, 2), Rational(1)), Rational(1, 2))}),
    };
    for (const auto& m : models) {
        const FuncModelPtr back = parse_function_spec(m->spec_string());
        CHECK(back->spec_string() == m->spec_string());
        CHECK(back->domain() == m->domain());
    }
}
