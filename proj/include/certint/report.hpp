#pragma once

#include <string>

#include <json.hpp>

#include "certint/cantor.hpp"
#include "certint/indefinite.hpp"
#include "certint/mvt.hpp"

namespace certint::report {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const Interval& I);
json to_json(const Point& p);
json to_json(const OscValue& o);
json to_json(const ContinuityWitness& w, bool include_trace = true);
json to_json(const MvtWitness& w);
json to_json(const IntegralEnclosure& enc, bool include_partition = false);
json to_json(const ThomsonReport& r);
json to_json(const DerivativeEnclosure& d);

Rational rational_from_json(const json& j);
Interval interval_from_json(const json& j);
Point point_from_json(const json& j);

// Self-contained re-checkable claims. Every certificate embeds the function
// spec and all parameters one re-check needs.
json cert_continuity(const std::string& fn, const ContinuityWitness& w);
json cert_integral(const std::string& fn, const Interval& I, const Rational& eps,
                   std::size_t budget, const IntegralEnclosure& enc);
json cert_mvt(const std::string& fn, const MvtWitness& w);
json cert_zero_derivative(const std::string& fn, const Rational& point, const Rational& radius);
json cert_empty_equality(const std::string& fn);
json cert_constancy(const std::string& fn, std::size_t probes);
json cert_step_measures(const std::string& fn, const Interval& I, const StepMeasureReport& rep);
json cert_osc_point(const std::string& fn, const Rational& at, const OscValue& o);

/// Re-checks one certificate from scratch; on failure `why` explains.
bool verify_certificate(const json& cert, std::string& why);

struct Report {
    std::string command;
    std::string status = "Certified"; // Certified | NotCertified | Error
    json result = json::object();
    json certificates = json::array();
    long timing_ms = 0;

    json to_json() const;
    int exit_code() const;
};

} // namespace certint::report
