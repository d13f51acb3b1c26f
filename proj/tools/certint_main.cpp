#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "certint/fnspec.hpp"
#include "certint/indefinite.hpp"
#include "certint/mvt.hpp"
#include "certint/report.hpp"
#include "certint/suites.hpp"

namespace {

using namespace certint;
using certint::report::Report;
using json = certint::report::json;

struct GlobalOpts {
    bool text = false;
    bool timing = false;
};

Interval cli_interval(const FuncModelPtr& f, const std::string& lo, const std::string& hi) {
    Interval dom = f->domain();
    const Rational a = lo.empty() ? dom.lo() : Rational::from_string(lo);
    const Rational b = hi.empty() ? dom.hi() : Rational::from_string(hi);
    return Interval(a, b);
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Rational::from_string(item));
    return out;
}

int emit(Report& rep, const GlobalOpts& g, long measured_ms) {
    rep.timing_ms = g.timing ? measured_ms : 0;
    if (g.text) {
        std::cout << rep.command << ": " << rep.status << "\n";
        std::cout << rep.result.dump(2) << "\n";
    } else {
        std::cout << rep.to_json().dump(2) << "\n";
    }
    return rep.exit_code();
}

int run_command(const std::string& name, const GlobalOpts& g, const std::function<Report()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = name;
    try {
        rep = fn();
        rep.command = name;
    } catch (const std::exception& e) {
        rep.status = "Error";
        rep.result = json{{"error", e.what()}};
        std::cerr << "error: " << e.what() << "\n";
    }
    const auto t1 = std::chrono::steady_clock::now();
    const long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return emit(rep, g, ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certint: certified Darboux integration, oscillation analysis and "
                 "mean-value witnesses over exact rational arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--text", g.text, "human-readable output instead of the JSON report");
    app.add_flag("--timing", g.timing, "include measured wall time (off keeps output byte-stable)");

    std::string fn_spec, lo_s, hi_s;
    std::string eps_s = "0";
    std::size_t budget = kDefaultIntegrateBudget;

    // integrate ------------------------------------------------------------
    auto* sc_int = app.add_subcommand("integrate", "certified Darboux integral enclosures");
    sc_int->add_option("--fn", fn_spec, "function spec")->required();
    sc_int->add_option("--lo", lo_s, "interval lower end (default: domain)");
    sc_int->add_option("--hi", hi_s, "interval upper end (default: domain)");
    sc_int->add_option("--eps", eps_s, "gap target (exact rational; 0 = certify exactly)");
    sc_int->add_option("--budget", budget, "max partition cells");
    sc_int->callback([&]() {
        std::exit(run_command("integrate", g, [&]() {
            const FuncModelPtr f = parse_function_spec(fn_spec);
            const Interval I = cli_interval(f, lo_s, hi_s);
            const Rational eps = Rational::from_string(eps_s);
            const IntegralEnclosure enc = integrate(*f, I, eps, budget);
            Report rep;
            rep.status = enc.certified() ? "Certified" : "NotCertified";
            rep.result = report::to_json(enc);
            rep.result["fn"] = f->spec_string();
            rep.result["interval"] = report::to_json(I);
            rep.certificates.push_back(report::cert_integral(f->spec_string(), I, eps, budget, enc));
            return rep;
        }));
    });

    // osc ------------------------------------------------------------------
    std::string at_s, schedule_s = "1/2,1/4,1/8,1/16";
    auto* sc_osc = app.add_subcommand("osc", "oscillation over an interval or at a point");
    sc_osc->add_option("--fn", fn_spec, "function spec")->required();
    sc_osc->add_option("--lo", lo_s, "interval lower end");
    sc_osc->add_option("--hi", hi_s, "interval upper end");
    sc_osc->add_option("--at", at_s, "point oscillation at this interior point");
    sc_osc->add_option("--schedule", schedule_s, "decreasing radius schedule");
    sc_osc->callback([&]() {
        std::exit(run_command("osc", g, [&]() {
            const FuncModelPtr f = parse_function_spec(fn_spec);
            Report rep;
            if (!at_s.empty()) {
                const Rational c = Rational::from_string(at_s);
                const OscValue o = osc_point(*f, c, parse_list(schedule_s));
                rep.status = o.exact ? "Certified" : "NotCertified";
                rep.result = json{{"fn", f->spec_string()}, {"at", c.str()},
                                  {"osc", report::to_json(o)}};
                rep.certificates.push_back(report::cert_osc_point(f->spec_string(), c, o));
            } else {
                const Interval I = cli_interval(f, lo_s, hi_s);
                const OscValue o = osc_interval(*f, I);
                rep.status = o.exact ? "Certified" : "NotCertified";
                rep.result = json{{"fn", f->spec_string()}, {"interval", report::to_json(I)},
                                  {"osc", report::to_json(o)}};
            }
            return rep;
        }));
    });

    // find-continuity --------------------------------------------------------
    std::size_t n_target = 10;
    auto* sc_fc = app.add_subcommand("find-continuity",
                                     "nested-interval search for a certified continuity point");
    sc_fc->add_option("--fn", fn_spec, "function spec")->required();
    sc_fc->add_option("--lo", lo_s, "interval lower end");
    sc_fc->add_option("--hi", hi_s, "interval upper end");
    sc_fc->add_option("--n", n_target, "stage target (osc bound 1/n)");
    sc_fc->add_option("--budget", budget, "refinement budget per stage");
    sc_fc->callback([&]() {
        std::exit(run_command("find-continuity", g, [&]() {
            const FuncModelPtr f = parse_function_spec(fn_spec);
            const Interval I = cli_interval(f, lo_s, hi_s);
            Report rep;
            try {
                const ContinuityWitness w = find_continuity_point(*f, I, n_target, budget);
                rep.status = "Certified";
                rep.result = json{{"fn", f->spec_string()},
                                  {"interval", report::to_json(I)},
                                  {"witness", report::to_json(w)}};
                rep.certificates.push_back(report::cert_continuity(f->spec_string(), w));
            } catch (const NoContinuityCertificateError& e) {
                rep.status = "NotCertified";
                rep.result = json{{"fn", f->spec_string()}, {"reason", e.what()}};
            }
            return rep;
        }));
    });

    // mvt --------------------------------------------------------------------
    std::string mvt_eps_s, tol_s;
    bool mvt_inequality = false, mvt_exact = false, mvt_bounded = false, mvt_sublevel = false,
         mvt_demo = false, mvt_constancy = false;
    std::size_t probes = 256;
    auto* sc_mvt = app.add_subcommand("mvt", "mean-value witnesses and measures");
    sc_mvt->add_option("--fn", fn_spec, "function spec")->required();
    sc_mvt->add_option("--lo", lo_s, "interval lower end");
    sc_mvt->add_option("--hi", hi_s, "interval upper end");
    sc_mvt->add_option("--eps", mvt_eps_s, "strict eps-witness pair with this eps");
    sc_mvt->add_flag("--inequality", mvt_inequality, "non-strict witness pair");
    sc_mvt->add_flag("--exact", mvt_exact, "bisection witness for continuous models");
    sc_mvt->add_option("--tol", tol_s, "residual tolerance for --exact");
    sc_mvt->add_flag("--bounded", mvt_bounded, "bounded-function inequality (no continuity)");
    sc_mvt->add_flag("--sublevel", mvt_sublevel, "exact sublevel/superlevel measures (step)");
    sc_mvt->add_flag("--no-equality-demo", mvt_demo, "empty-equality-set demonstration");
    sc_mvt->add_flag("--constancy", mvt_constancy, "zero-off-breakpoints constancy check");
    sc_mvt->add_option("--probes", probes, "probe count for --constancy");
    sc_mvt->add_option("--budget", budget, "integration budget");
    sc_mvt->callback([&]() {
        std::exit(run_command("mvt", g, [&]() {
            const FuncModelPtr f = parse_function_spec(fn_spec);
            const Interval I = cli_interval(f, lo_s, hi_s);
            Report rep;
            const std::string fs = f->spec_string();
            if (!mvt_eps_s.empty()) {
                const MvtWitness w =
                    epsilon_witnesses(*f, I, Rational::from_string(mvt_eps_s), 8, budget);
                rep.status = verify_mvt_witness(*f, w) ? "Certified" : "NotCertified";
                rep.result = json{{"fn", fs}, {"witness", report::to_json(w)}};
                rep.certificates.push_back(report::cert_mvt(fs, w));
            } else if (mvt_inequality) {
                const MvtWitness w = inequality_witnesses(*f, I, 8, budget);
                rep.status = verify_mvt_witness(*f, w) ? "Certified" : "NotCertified";
                rep.result = json{{"fn", fs}, {"witness", report::to_json(w)}};
                rep.certificates.push_back(report::cert_mvt(fs, w));
            } else if (mvt_exact) {
                if (tol_s.empty()) throw PreconditionError("--exact needs --tol");
                const MvtWitness w =
                    exact_witness_continuous(*f, I, Rational::from_string(tol_s), 8, budget);
                rep.status = verify_mvt_witness(*f, w) ? "Certified" : "NotCertified";
                rep.result = json{{"fn", fs}, {"witness", report::to_json(w)}};
                rep.result["approx_decimal"] = w.c1->point.rat().decimal(16) + " (not certified)";
                rep.certificates.push_back(report::cert_mvt(fs, w));
            } else if (mvt_bounded) {
                const MvtWitness w = bounded_mean_inequality(*f, I, budget);
                const bool both = w.c1.has_value() && w.c2.has_value();
                rep.status = both && verify_mvt_witness(*f, w) ? "Certified" : "NotCertified";
                rep.result = json{{"fn", fs}, {"witness", report::to_json(w)}};
                if (!w.c1) rep.result["no_witness_lower"] = true;
                if (!w.c2) rep.result["no_witness_upper"] = true;
                if (both) rep.certificates.push_back(report::cert_mvt(fs, w));
            } else if (mvt_sublevel) {
                const StepMeasureReport r = step_sublevel_measures(*f, I);
                rep.status = (r.sublevel_measure.sign() > 0 && r.superlevel_measure.sign() > 0)
                                 ? "Certified"
                                 : "NotCertified";
                rep.result = json{{"fn", fs},
                                  {"threshold", r.threshold.str()},
                                  {"sublevel_measure", r.sublevel_measure.str()},
                                  {"superlevel_measure", r.superlevel_measure.str()}};
                rep.certificates.push_back(report::cert_step_measures(fs, I, r));
            } else if (mvt_demo) {
                const EqualityWitnessDemo d = no_equality_witness_demo(*f);
                rep.status = d.applicable ? "Certified" : "Error";
                json slopes = json::array();
                for (const Rational& s : d.slope_values) slopes.push_back(s.str());
                rep.result = json{{"fn", fs},
                                  {"applicable", d.applicable},
                                  {"equality_set_empty", d.equality_set_empty},
                                  {"delta", d.delta.str()},
                                  {"slopes", slopes}};
                if (d.c1) rep.result["c1"] = d.c1->str();
                if (d.c2) rep.result["c2"] = d.c2->str();
                if (d.applicable && d.equality_set_empty)
                    rep.certificates.push_back(report::cert_empty_equality(fs));
            } else if (mvt_constancy) {
                const bool ok = zero_step_constancy_check(*f, probes);
                rep.status = ok ? "Certified" : "NotCertified";
                rep.result = json{{"fn", fs}, {"constant", ok}, {"probes", probes}};
                if (ok) rep.certificates.push_back(report::cert_constancy(fs, probes));
            } else {
                throw PreconditionError(
                    "pick one of --eps/--inequality/--exact/--bounded/--sublevel/"
                    "--no-equality-demo/--constancy");
            }
            return rep;
        }));
    });

    // cantor -----------------------------------------------------------------
    std::size_t depth = 8, count = 0;
    std::string ratio_s = "1/4", x_s, cantor_report = "nonconstancy";
    bool dump = false;
    auto* sc_cant = app.add_subcommand("cantor", "positive-measure nowhere-dense set toolkit");
    sc_cant->add_option("--depth", depth, "materialization depth");
    sc_cant->add_option("--ratio", ratio_s, "per-stage removal ratio (default 1/4)");
    sc_cant->add_option("--report", cantor_report, "stages|nonconstancy|witnesses|eval");
    sc_cant->add_option("--x", x_s, "evaluation point for --report eval");
    sc_cant->add_option("--count", count, "witness count (default: all)");
    sc_cant->add_flag("--dump", dump, "print kept intervals of the deepest stage, one 'lo hi' per line");
    sc_cant->callback([&]() {
        if (dump) {
            // Plain text stage dump; consumed by other tools.
            try {
                const FatCantorSet set(FatCantorSpec(Rational::from_string(ratio_s)), depth);
                for (const Interval& iv : set.deepest().kept)
                    std::cout << iv.lo().str() << " " << iv.hi().str() << "\n";
                std::exit(0);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                std::exit(1);
            }
        }
        std::exit(run_command("cantor", g, [&]() {
            const FatCantorSpec spec(Rational::from_string(ratio_s));
            Report rep;
            if (cantor_report == "stages") {
                const FatCantorSet set(spec, depth);
                json stages = json::array();
                for (std::size_t n = 0; n <= depth; ++n) {
                    const FatCantorStage& st = set.stage(n);
                    stages.push_back(json{{"stage", n},
                                          {"kept_count", st.kept.size()},
                                          {"kept_measure", st.kept_measure.str()}});
                }
                rep.result = json{{"ratio", spec.ratio().str()},
                                  {"limit_measure", spec.limit_measure().str()},
                                  {"stages", stages}};
            } else if (cantor_report == "eval") {
                if (x_s.empty()) throw PreconditionError("--report eval needs --x");
                const CantorIndefinite F(spec, depth);
                const Interval v = F.eval(Rational::from_string(x_s));
                rep.result = json{{"x", x_s}, {"enclosure", report::to_json(v)},
                                  {"width", v.width().str()}};
            } else if (cantor_report == "witnesses") {
                const CantorIndefinite F(spec, depth);
                const auto ws =
                    F.zero_derivative_witnesses(count == 0 ? static_cast<std::size_t>(-1) : count);
                json arr = json::array();
                const std::string fs = "fatcantor depth=" + std::to_string(depth) +
                                       (spec.ratio() == Rational(1, 4)
                                            ? std::string()
                                            : " ratio=" + spec.ratio().str());
                std::size_t verified = 0;
                for (const auto& w : ws) {
                    const bool ok = F.verify_zero_derivative(w);
                    verified += ok ? 1 : 0;
                    arr.push_back(json{{"point", w.point.str()}, {"radius", w.radius.str()},
                                       {"verified", ok}});
                    rep.certificates.push_back(report::cert_zero_derivative(fs, w.point, w.radius));
                }
                rep.status = verified == ws.size() ? "Certified" : "NotCertified";
                rep.result = json{{"witnesses", arr}, {"verified", verified}};
            } else if (cantor_report == "nonconstancy") {
                const CantorIndefinite F(spec, depth);
                const auto r = F.nonconstancy_report();
                rep.status = r.certified ? "Certified" : "NotCertified";
                rep.result = json{{"f_at_one", report::to_json(r.f_at_one)},
                                  {"f_at_zero", r.f_at_zero.str()},
                                  {"zero_derivative_witnesses", r.witness_count},
                                  {"certified", r.certified}};
            } else {
                throw PreconditionError("unknown --report '" + cantor_report + "'");
            }
            return rep;
        }));
    });

    // thomson ----------------------------------------------------------------
    std::string indef_spec, base_s = "0", const_s = "0", table_file, partition_s, xi_s, xip_s,
                policy = "midpoint";
    std::size_t uniform_n = 0;
    auto* sc_th = app.add_subcommand("thomson", "tagged-subdivision variation sums");
    sc_th->add_option("--fn", fn_spec, "evaluate this function model directly as F");
    sc_th->add_option("--indefinite", indef_spec, "F = indefinite integral of this integrand");
    sc_th->add_option("--base", base_s, "base point for --indefinite");
    sc_th->add_option("--constant", const_s, "constant for --indefinite");
    sc_th->add_option("--table", table_file, "file of exact samples 'x F(x)'");
    sc_th->add_option("--uniform", uniform_n, "uniform subdivision with this many cells");
    sc_th->add_option("--partition", partition_s, "explicit subdivision points");
    sc_th->add_option("--xi", xi_s, "left tags, one per cell");
    sc_th->add_option("--xi-prime", xip_s, "right tags (default: same as --xi)");
    sc_th->add_option("--policy", policy, "midpoint|adversarial for generated tags");
    std::size_t schedule_levels = 0;
    sc_th->add_option("--schedule", schedule_levels,
                      "adversarial sums on 2,4,...,2^k cells plus a trend verdict");
    sc_th->callback([&]() {
        std::exit(run_command("thomson", g, [&]() {
            std::unique_ptr<ExactFunction> F;
            FuncModelPtr model;
            std::unique_ptr<IndefiniteIntegral> indef;
            std::optional<Interval> span;
            if (!fn_spec.empty()) {
                model = parse_function_spec(fn_spec);
                span = model->domain();
                F = std::make_unique<ModelEvaluator>(model);
            } else if (!indef_spec.empty()) {
                model = parse_function_spec(indef_spec);
                span = model->domain();
                indef = std::make_unique<IndefiniteIntegral>(
                    model, Rational::from_string(base_s), Rational::from_string(const_s));
                F = std::make_unique<IndefiniteEvaluator>(*indef);
            } else if (!table_file.empty()) {
                std::ifstream in(table_file);
                if (!in) throw Error("cannot open table file " + table_file);
                std::stringstream ss;
                ss << in.rdbuf();
                auto samples = parse_sample_table(ss.str());
                if (samples.size() < 3) throw PreconditionError("table needs at least 3 samples");
                span = Interval(samples.begin()->first, samples.rbegin()->first);
                F = std::make_unique<TableEvaluator>(std::move(samples));
            } else {
                throw PreconditionError("pick one of --fn/--indefinite/--table");
            }

            if (schedule_levels > 0) {
                if (!span) throw PreconditionError("no domain available for --schedule");
                const ThomsonScheduleReport sr =
                    thomson_schedule(*F, *span, model.get(), schedule_levels);
                Report rep;
                json lv = json::array();
                for (const auto& level : sr.levels)
                    lv.push_back(json{{"cells", level.subdivision.cell_count()},
                                      {"adversarial_sum", level.sum_value.str()}});
                const bool consistent = sr.verdict == ThomsonVerdict::ConsistentWithIndefinite;
                rep.status = consistent ? "Certified" : "NotCertified";
                rep.result = json{{"levels", lv},
                                  {"verdict", consistent ? "ConsistentWithIndefinite"
                                                         : "InconsistentEvidence"}};
                return rep;
            }

            ThomsonReport tr{Partition({Rational(0), Rational(1)}), {}, Rational(0)};
            if (!partition_s.empty()) {
                const Partition P(parse_list(partition_s));
                if (!xi_s.empty()) {
                    const auto xis = parse_list(xi_s);
                    const auto xips = xip_s.empty() ? xis : parse_list(xip_s);
                    if (xis.size() != P.cell_count() || xips.size() != P.cell_count())
                        throw PreconditionError("one tag per cell expected");
                    std::vector<TagPair> tags;
                    for (std::size_t i = 0; i < xis.size(); ++i)
                        tags.push_back(TagPair{xis[i], xips[i]});
                    tr = thomson_sum(*F, P, tags);
                } else if (policy == "adversarial") {
                    tr = thomson_adversarial(*F, P, default_tag_candidates(model.get(), P));
                } else {
                    tr = thomson_midpoint(*F, P);
                }
            } else if (uniform_n > 0) {
                if (!span) throw PreconditionError("no domain available for --uniform");
                const Partition P = Partition::uniform(*span, uniform_n);
                tr = policy == "adversarial"
                         ? thomson_adversarial(*F, P, default_tag_candidates(model.get(), P))
                         : thomson_midpoint(*F, P);
            } else if (const auto* tbl = dynamic_cast<const TableEvaluator*>(F.get())) {
                // Even-indexed samples form the subdivision, odd-indexed ones
                // are the tags.
                std::vector<Rational> pts, tags_x;
                std::size_t idx = 0;
                for (const auto& [x, fx] : tbl->samples()) {
                    (void)fx;
                    if (idx % 2 == 0) pts.push_back(x);
                    else tags_x.push_back(x);
                    ++idx;
                }
                if (pts.size() < 2 || tags_x.size() + 1 != pts.size())
                    throw PreconditionError("table auto mode needs an odd sample count");
                std::vector<TagPair> tags;
                for (const Rational& t : tags_x) tags.push_back(TagPair{t, t});
                tr = thomson_sum(*F, Partition(pts), tags);
            } else {
                throw PreconditionError("need --uniform or --partition");
            }

            Report rep;
            rep.result = report::to_json(tr);
            return rep;
        }));
    });

    // verify -----------------------------------------------------------------
    std::string suite_name;
    std::uint64_t seed = suites::kDefaultSeed;
    std::size_t family = 100;
    auto* sc_ver = app.add_subcommand("verify", "run a named verification bundle");
    sc_ver->add_option("name", suite_name, "one of: constancy-ae dense-derivative mvt-riemann bounded-mvt counterexamples")
        ->required();
    sc_ver->add_option("--seed", seed, "seed for randomized families");
    sc_ver->add_option("--count", family, "family size for randomized bundles");
    sc_ver->callback([&]() {
        std::exit(run_command("verify", g, [&]() {
            const suites::SuiteResult res = suites::run(suite_name, seed, family);
            Report rep;
            json items = json::array();
            for (const auto& item : res.items) {
                std::cerr << (item.pass ? "[PASS] " : "[FAIL] ") << item.name
                          << (item.details.empty() ? "" : " (" + item.details + ")") << "\n";
                items.push_back(json{{"name", item.name}, {"pass", item.pass},
                                     {"details", item.details}});
            }
            rep.status = res.all_pass() ? "Certified" : "NotCertified";
            rep.result = json{{"suite", res.name}, {"seed", seed}, {"items", items}};
            return rep;
        }));
    });

    // verify-certificate -------------------------------------------------------
    std::string in_file;
    auto* sc_vc = app.add_subcommand("verify-certificate",
                                     "re-check the certificates of a previous report");
    sc_vc->add_option("--in", in_file, "report JSON file (default: stdin)");
    sc_vc->callback([&]() {
        std::exit(run_command("verify-certificate", g, [&]() {
            std::stringstream ss;
            if (in_file.empty()) {
                ss << std::cin.rdbuf();
            } else {
                std::ifstream in(in_file);
                if (!in) throw Error("cannot open " + in_file);
                ss << in.rdbuf();
            }
            const json doc = json::parse(ss.str());
            const json& certs = doc.contains("certificates") ? doc.at("certificates") : doc;
            if (!certs.is_array()) throw ParseError("no certificate array found");
            json items = json::array();
            std::size_t ok = 0;
            for (const json& c : certs) {
                std::string why;
                const bool pass = report::verify_certificate(c, why);
                ok += pass ? 1 : 0;
                items.push_back(json{{"type", c.value("type", "?")}, {"pass", pass},
                                     {"why", why}});
            }
            Report rep;
            rep.status = (ok == certs.size()) ? "Certified" : "NotCertified";
            rep.result = json{{"checked", certs.size()}, {"passed", ok}, {"items", items}};
            return rep;
        }));
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
