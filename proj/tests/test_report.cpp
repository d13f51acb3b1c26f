#include <doctest.h>

#include "certint/fnspec.hpp"
#include "certint/report.hpp"
#include "certint/prng.hpp"

using namespace certint;
using certint::report::json;

namespace {

const Interval kUnit(Rational(0), Rational(1));

} // namespace

TEST_CASE("valid certificates re-verify") {
    std::string why;

    const FuncModelPtr f = parse_function_spec("step 0 1 bp=1/3,2/3 vals=2,-1,5");
    const IntegralEnclosure enc = integrate(*f, kUnit, Rational(0), 512);
    const json ic = report::cert_integral(f->spec_string(), kUnit, Rational(0), 512, enc);
    CHECK(report::verify_certificate(ic, why));

    const ContinuityWitness w = find_continuity_point(*f, kUnit, 8);
    CHECK(report::verify_certificate(report::cert_continuity(f->spec_string(), w), why));

    const MvtWitness mw = inequality_witnesses(*f, kUnit);
    CHECK(report::verify_certificate(report::cert_mvt(f->spec_string(), mw), why));

    const json zd = report::cert_zero_derivative("fatcantor depth=3", Rational(1, 2),
                                                 Rational(1, 16));
    CHECK(report::verify_certificate(zd, why));

    CHECK(report::verify_certificate(report::cert_empty_equality("abs -1 1 center=0"), why));

    const StepMeasureReport rep = step_sublevel_measures(*f, kUnit);
    CHECK(report::verify_certificate(report::cert_step_measures(f->spec_string(), kUnit, rep),
                                     why));
}

TEST_CASE("tampered certificates are rejected") {
    std::string why;

    const FuncModelPtr f = parse_function_spec("step 0 1 bp=1/2 vals=1,0");
    const IntegralEnclosure enc = integrate(*f, kUnit, Rational(0), 512);
    json ic = report::cert_integral(f->spec_string(), kUnit, Rational(0), 512, enc);
    ic["enclosure"]["lower_integral"] = json::array({"1/3", "1/3"});
    CHECK(!report::verify_certificate(ic, why));

    const ContinuityWitness w = find_continuity_point(*f, kUnit, 8);
    json cc = report::cert_continuity(f->spec_string(), w);
    cc["osc_bound"] = "0"; // stricter than certified
    cc["point"] = "1/2";   // the discontinuity itself
    cc["radius"] = "1/8";
    CHECK(!report::verify_certificate(cc, why));

    const MvtWitness mw = inequality_witnesses(*f, kUnit);
    json mc = report::cert_mvt(f->spec_string(), mw);
    mc["c1"]["value"] = "9"; // no longer matches a fresh evaluation
    CHECK(!report::verify_certificate(mc, why));

    json zd = report::cert_zero_derivative("fatcantor depth=3", Rational(3, 8), Rational(1, 16));
    CHECK(!report::verify_certificate(zd, why)); // ball touches the cover

    json eq = report::cert_empty_equality("poly 0 1 coeffs=0,1");
    CHECK(!report::verify_certificate(eq, why)); // linear control has witnesses everywhere

    json unknown{{"type", "alien"}};
    CHECK(!report::verify_certificate(unknown, why));
}

TEST_CASE("witness serialization round-trips through verification") {
    const FuncModelPtr sq = parse_function_spec("poly 0 1 coeffs=0,0,1");
    const MvtWitness w = exact_witness_continuous(*sq, kUnit, Rational(1, 1000000));
    const json cert = report::cert_mvt(sq->spec_string(), w);
    std::string why;
    CHECK(report::verify_certificate(cert, why));
    // And through a dump/parse cycle, as the CLI would do it.
    const json reparsed = json::parse(cert.dump());
    CHECK(report::verify_certificate(reparsed, why));
}

TEST_CASE("point json round-trip") {
    const Point pi_pt = Point::pi_rational(3, 22);
    const Point back = report::point_from_json(report::to_json(pi_pt));
    CHECK(back.kind() == Point::Kind::PiRational);
    CHECK(back.pi_num() == 3);
    CHECK(back.pi_den() == 22);
    const Point r = report::point_from_json(report::to_json(Point::rational(Rational(-5, 7))));
    CHECK(r.rat() == Rational(-5, 7));
}
