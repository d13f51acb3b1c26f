#include "certint/report.hpp"

#include "certint/fnspec.hpp"
#include "certint/oscillation.hpp"

namespace certint::report {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Interval& I) { return json::array({I.lo().str(), I.hi().str()}); }

json to_json(const Point& p) {
    if (p.kind() == Point::Kind::Rational)
        return json{{"kind", "rat"}, {"value", p.rat().str()}};
    return json{{"kind", "pi-rat"}, {"p", p.pi_num().get_str()}, {"q", p.pi_den().get_str()}};
}

json to_json(const OscValue& o) {
    return json{{"value", to_json(o.value)}, {"exact", o.exact}};
}

json to_json(const ContinuityWitness& w, bool include_trace) {
    json j{{"point", w.point.str()},
           {"radius", w.radius.str()},
           {"osc_bound", w.osc_bound.str()}};
    if (include_trace && w.trace) {
        json stages = json::array();
        for (const NestedStage& s : w.trace->stages)
            stages.push_back(json{{"interval", to_json(s.interval)},
                                  {"osc_bound", s.osc_bound.str()},
                                  {"width", s.width.str()}});
        j["trace"] = json{{"stages", stages}, {"limit_point", w.trace->limit_point.str()}};
    }
    return j;
}

namespace {

const char* kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::EpsilonPair: return "epsilon-pair";
    case WitnessKind::InequalityPair: return "inequality-pair";
    case WitnessKind::Exact: return "exact";
    case WitnessKind::BoundedPair: return "bounded-pair";
    }
    return "?";
}

WitnessKind kind_from_name(const std::string& s) {
    if (s == "epsilon-pair") return WitnessKind::EpsilonPair;
    if (s == "inequality-pair") return WitnessKind::InequalityPair;
    if (s == "exact") return WitnessKind::Exact;
    if (s == "bounded-pair") return WitnessKind::BoundedPair;
    throw ParseError("unknown witness kind '" + s + "'");
}

json side_json(const SideWitness& s) {
    json j{{"point", to_json(s.point)}, {"value", s.value.str()}};
    if (s.continuity) j["continuity"] = to_json(*s.continuity, /*include_trace=*/false);
    return j;
}

SideWitness side_from_json(const json& j) {
    SideWitness s{point_from_json(j.at("point")), rational_from_json(j.at("value")),
                  std::nullopt};
    if (j.contains("continuity")) {
        const json& c = j.at("continuity");
        s.continuity = ContinuityWitness{rational_from_json(c.at("point")),
                                         rational_from_json(c.at("radius")),
                                         rational_from_json(c.at("osc_bound")), std::nullopt};
    }
    return s;
}

} // namespace

json to_json(const MvtWitness& w) {
    json j{{"kind", kind_name(w.kind)},
           {"interval", to_json(w.interval)},
           {"lower_integral", to_json(w.lower_integral)},
           {"upper_integral", to_json(w.upper_integral)},
           {"budget", w.budget}};
    if (w.epsilon) j["epsilon"] = w.epsilon->str();
    if (w.tolerance) j["tolerance"] = w.tolerance->str();
    if (w.c1) j["c1"] = side_json(*w.c1);
    if (w.c2) j["c2"] = side_json(*w.c2);
    if (w.kind == WitnessKind::Exact) j["bisection_steps"] = w.bisection_steps;
    return j;
}

json to_json(const IntegralEnclosure& enc, bool include_partition) {
    json j{{"lower_integral", to_json(enc.lower_integral)},
           {"upper_integral", to_json(enc.upper_integral)},
           {"gap_upper_bound", enc.gap_upper_bound.str()},
           {"upper_sum", enc.sums.upper.str()},
           {"lower_sum", enc.sums.lower.str()},
           {"upper_sum_exact", enc.sums.upper_exact},
           {"lower_sum_exact", enc.sums.lower_exact},
           {"cells", enc.partition_used.cell_count()},
           {"status", enc.certified() ? "Certified" : "NotCertified"}};
    if (include_partition) {
        json pts = json::array();
        for (const Rational& p : enc.partition_used.points()) pts.push_back(p.str());
        j["partition"] = pts;
    }
    return j;
}

json to_json(const ThomsonReport& r) {
    json tags = json::array();
    for (const TagPair& t : r.tags)
        tags.push_back(json::array({t.xi.str(), t.xi_prime.str()}));
    json pts = json::array();
    for (const Rational& p : r.subdivision.points()) pts.push_back(p.str());
    const char* policy = r.policy == TagPolicy::Midpoint      ? "midpoint"
                         : r.policy == TagPolicy::Adversarial ? "adversarial"
                                                              : "explicit";
    return json{{"subdivision", pts}, {"tags", tags}, {"sum", r.sum_value.str()},
                {"policy", policy}};
}

json to_json(const DerivativeEnclosure& d) {
    json radii = json::array(), encs = json::array();
    for (const Rational& r : d.radii) radii.push_back(r.str());
    for (const Interval& e : d.quotient_enclosures) encs.push_back(to_json(e));
    json j{{"point", d.point.str()},
           {"radii", radii},
           {"quotient_enclosures", encs},
           {"zero_certified", d.zero_certified}};
    if (d.zero_radius) j["zero_radius"] = d.zero_radius->str();
    return j;
}

Rational rational_from_json(const json& j) {
    return Rational::from_string(j.get<std::string>());
}

Interval interval_from_json(const json& j) {
    return Interval(rational_from_json(j.at(0)), rational_from_json(j.at(1)));
}

Point point_from_json(const json& j) {
    if (j.at("kind") == "rat") return Point::rational(rational_from_json(j.at("value")));
    return Point::pi_rational(mpz_class(j.at("p").get<std::string>()),
                              mpz_class(j.at("q").get<std::string>()));
}

json cert_continuity(const std::string& fn, const ContinuityWitness& w) {
    json j = to_json(w, /*include_trace=*/false);
    j["type"] = "continuity-witness";
    j["fn"] = fn;
    return j;
}

json cert_integral(const std::string& fn, const Interval& I, const Rational& eps,
                   std::size_t budget, const IntegralEnclosure& enc) {
    return json{{"type", "integral-enclosure"},
                {"fn", fn},
                {"interval", to_json(I)},
                {"eps", eps.str()},
                {"budget", budget},
                {"enclosure", to_json(enc)}};
}

json cert_mvt(const std::string& fn, const MvtWitness& w) {
    json j = to_json(w);
    j["type"] = "mvt-witness";
    j["fn"] = fn;
    return j;
}

json cert_zero_derivative(const std::string& fn, const Rational& point, const Rational& radius) {
    return json{{"type", "zero-derivative"},
                {"fn", fn},
                {"point", point.str()},
                {"radius", radius.str()}};
}

json cert_empty_equality(const std::string& fn) {
    return json{{"type", "empty-equality-set"}, {"fn", fn}};
}

json cert_constancy(const std::string& fn, std::size_t probes) {
    return json{{"type", "constancy"}, {"fn", fn}, {"probes", probes}};
}

json cert_step_measures(const std::string& fn, const Interval& I, const StepMeasureReport& rep) {
    return json{{"type", "step-measures"},
                {"fn", fn},
                {"interval", to_json(I)},
                {"threshold", rep.threshold.str()},
                {"sublevel_measure", rep.sublevel_measure.str()},
                {"superlevel_measure", rep.superlevel_measure.str()}};
}

json cert_osc_point(const std::string& fn, const Rational& at, const OscValue& o) {
    return json{{"type", "osc-point"}, {"fn", fn}, {"at", at.str()}, {"osc", to_json(o)}};
}

namespace {

MvtWitness mvt_from_json(const json& j) {
    MvtWitness w{kind_from_name(j.at("kind").get<std::string>()),
                 interval_from_json(j.at("interval")),
                 std::nullopt,
                 std::nullopt,
                 std::nullopt,
                 std::nullopt,
                 interval_from_json(j.at("lower_integral")),
                 interval_from_json(j.at("upper_integral")),
                 0,
                 j.value("budget", kDefaultIntegrateBudget)};
    if (j.contains("epsilon")) w.epsilon = rational_from_json(j.at("epsilon"));
    if (j.contains("tolerance")) w.tolerance = rational_from_json(j.at("tolerance"));
    if (j.contains("c1")) w.c1 = side_from_json(j.at("c1"));
    if (j.contains("c2")) w.c2 = side_from_json(j.at("c2"));
    return w;
}

} // namespace

bool verify_certificate(const json& cert, std::string& why) {
    const std::string type = cert.at("type").get<std::string>();
    try {
        if (type == "continuity-witness") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const ContinuityWitness w{rational_from_json(cert.at("point")),
                                      rational_from_json(cert.at("radius")),
                                      rational_from_json(cert.at("osc_bound")), std::nullopt};
            if (verify_continuity_witness(*f, w)) return true;
            why = "oscillation bound re-check failed";
            return false;
        }
        if (type == "integral-enclosure") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const Interval I = interval_from_json(cert.at("interval"));
            const IntegralEnclosure enc =
                integrate(*f, I, rational_from_json(cert.at("eps")),
                          cert.at("budget").get<std::size_t>());
            const json& e = cert.at("enclosure");
            const bool ok =
                to_json(enc.lower_integral) == e.at("lower_integral") &&
                to_json(enc.upper_integral) == e.at("upper_integral") &&
                enc.gap_upper_bound.str() == e.at("gap_upper_bound").get<std::string>() &&
                enc.sums.upper.str() == e.at("upper_sum").get<std::string>() &&
                enc.sums.lower.str() == e.at("lower_sum").get<std::string>();
            if (!ok) why = "recomputed enclosure differs";
            return ok;
        }
        if (type == "mvt-witness") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            if (verify_mvt_witness(*f, mvt_from_json(cert))) return true;
            why = "witness re-verification failed";
            return false;
        }
        if (type == "zero-derivative") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const Rational p = rational_from_json(cert.at("point"));
            const Rational r = rational_from_json(cert.at("radius"));
            const Interval ball(p - r, p + r);
            const RangeResult rr = f->range(ball);
            if (rr.bounds.lo().is_zero() && rr.bounds.hi().is_zero()) return true;
            why = "integrand range over the ball is not [0,0]";
            return false;
        }
        if (type == "empty-equality-set") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const EqualityWitnessDemo demo = no_equality_witness_demo(*f);
            if (demo.applicable && demo.equality_set_empty) return true;
            why = "equality set not certified empty";
            return false;
        }
        if (type == "constancy") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            if (zero_step_constancy_check(*f, cert.at("probes").get<std::size_t>())) return true;
            why = "constancy probe failed";
            return false;
        }
        if (type == "step-measures") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const Interval I = interval_from_json(cert.at("interval"));
            const StepMeasureReport rep = step_sublevel_measures(*f, I);
            const bool ok =
                rep.threshold.str() == cert.at("threshold").get<std::string>() &&
                rep.sublevel_measure.str() == cert.at("sublevel_measure").get<std::string>() &&
                rep.superlevel_measure.str() == cert.at("superlevel_measure").get<std::string>() &&
                rep.sublevel_measure.sign() > 0 && rep.superlevel_measure.sign() > 0;
            if (!ok) why = "recomputed measures differ or are not positive";
            return ok;
        }
        if (type == "osc-point") {
            const FuncModelPtr f = parse_function_spec(cert.at("fn").get<std::string>());
            const Rational at = rational_from_json(cert.at("at"));
            const json& o = cert.at("osc");
            const Interval claimed = interval_from_json(o.at("value"));
            const OscValue fresh = osc_point(*f, at, {Rational(1, 8), Rational(1, 64)});
            // The claimed enclosure must be consistent with a fresh bound.
            if (fresh.exact && o.at("exact").get<bool>()) {
                if (fresh.value == claimed) return true;
                why = "exact oscillation value differs";
                return false;
            }
            if (claimed.hi() >= fresh.value.lo() && claimed.lo() <= fresh.value.hi()) return true;
            why = "oscillation enclosures are disjoint";
            return false;
        }
        why = "unknown certificate type '" + type + "'";
        return false;
    } catch (const std::exception& e) {
        why = e.what();
        return false;
    }
}

json Report::to_json() const {
    return json{{"command", command},
                {"status", status},
                {"result", result},
                {"certificates", certificates},
                {"timing_ms", timing_ms}};
}

int Report::exit_code() const {
    if (status == "Certified") return 0;
    if (status == "NotCertified") return 2;
    return 1;
}

} // namespace certint::report
