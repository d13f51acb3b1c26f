#include "certint/funcmodel.hpp"

#include <algorithm>
#include <sstream>

namespace certint {

namespace {

std::string join_rationals(const std::vector<Rational>& rs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += sep;
        out += rs[i].str();
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Point

Point Point::pi_rational(mpz_class p, mpz_class q) {
    if (p <= 0 || q <= 0) throw Error("pi-rational point needs positive p and q");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Point pt{Rational(0)};
    pt.kind_ = Kind::PiRational;
    pt.p_ = p / g;
    pt.q_ = q / g;
    return pt;
}

const Rational& Point::rat() const {
    if (kind_ != Kind::Rational) throw Error("pi-rational point has no rational value");
    return value_;
}

std::string Point::str() const {
    if (kind_ == Kind::Rational) return value_.str();
    std::ostringstream os;
    os << "pi*" << p_ << "/" << q_;
    return os.str();
}

// ---------------------------------------------------------------------------
// FuncModel base

Rational FuncModel::eval(const Point& x) const {
    if (x.kind() == Point::Kind::Rational) {
        if (!domain().contains(x.rat()))
            throw OutOfDomainError(x.rat().str() + " outside " + domain().str());
        return eval_rational(x.rat());
    }
    if (!supports_pi_points())
        throw UnsupportedPointKindError("model '" + spec_string() + "' rejects pi-rational points");
    const Interval d = domain();
    if (compare_with_pi_multiple(d.lo(), x.pi_num(), x.pi_den()) != Ordering::LT ||
        compare_with_pi_multiple(d.hi(), x.pi_num(), x.pi_den()) != Ordering::GT)
        throw OutOfDomainError(x.str() + " outside " + d.str());
    return eval_pi_rational(x.pi_num(), x.pi_den());
}

RangeResult FuncModel::range(const Interval& I) const {
    if (!domain().contains(I))
        throw OutOfDomainError("range over " + I.str() + " outside " + domain().str());
    return range_impl(I);
}

std::vector<Rational> FuncModel::split_points(const Interval&) const { return {}; }

std::optional<DarbouxBounds> FuncModel::darboux_bounds(const Interval&) const {
    return std::nullopt;
}

std::optional<Interval> FuncModel::ideal_integral(const Interval& I) const {
    auto db = darboux_bounds(I);
    if (db && db->lower_integral == db->upper_integral && db->lower_integral.is_degenerate())
        return db->lower_integral;
    return std::nullopt;
}

std::vector<Interval> FuncModel::zero_runs(const Interval&) const { return {}; }

std::optional<Rational> FuncModel::point_oscillation(const Rational&) const {
    return std::nullopt;
}

std::optional<Point> FuncModel::find_point_above(const Interval&, const Rational&, bool) const {
    return std::nullopt;
}

std::optional<Point> FuncModel::find_point_below(const Interval&, const Rational&, bool) const {
    return std::nullopt;
}

Rational FuncModel::eval_pi_rational(const mpz_class&, const mpz_class&) const {
    throw UnsupportedPointKindError("model '" + spec_string() + "' rejects pi-rational points");
}

// ---------------------------------------------------------------------------
// StepFunction

StepFunction::StepFunction(Interval domain, std::vector<Rational> breakpoints,
                           std::vector<Rational> values,
                           std::vector<std::optional<Rational>> breakpoint_values)
    : domain_(std::move(domain)),
      breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      breakpoint_values_(std::move(breakpoint_values)) {
    if (domain_.is_degenerate()) throw Error("step function needs a nondegenerate domain");
    if (values_.size() != breakpoints_.size() + 1)
        throw Error("step function needs one value per open subinterval");
    if (breakpoint_values_.empty()) breakpoint_values_.resize(breakpoints_.size());
    if (breakpoint_values_.size() != breakpoints_.size())
        throw Error("one optional value per breakpoint expected");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!(domain_.lo() < breakpoints_[i] && breakpoints_[i] < domain_.hi()))
            throw Error("breakpoint " + breakpoints_[i].str() + " not interior to " + domain_.str());
        if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
            throw Error("breakpoints must be strictly increasing");
    }
}

Interval StepFunction::piece_span(std::size_t i) const {
    const Rational lo = (i == 0) ? domain_.lo() : breakpoints_[i - 1];
    const Rational hi = (i == breakpoints_.size()) ? domain_.hi() : breakpoints_[i];
    return Interval(lo, hi);
}

Rational StepFunction::breakpoint_value(std::size_t i) const {
    return breakpoint_values_[i] ? *breakpoint_values_[i] : values_[i];
}

bool StepFunction::has_explicit_breakpoint_values() const {
    return std::any_of(breakpoint_values_.begin(), breakpoint_values_.end(),
                       [](const auto& v) { return v.has_value(); });
}

Rational StepFunction::eval_rational(const Rational& x) const {
    if (x == domain_.lo()) return values_.front();
    if (x == domain_.hi()) return values_.back();
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it != breakpoints_.end() && *it == x)
        return breakpoint_value(static_cast<std::size_t>(it - breakpoints_.begin()));
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

RangeResult StepFunction::range_impl(const Interval& I) const {
    Rational lo = eval_rational(I.lo()), hi = lo;
    auto take = [&](const Rational& v) {
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    };
    take(eval_rational(I.hi()));
    // Breakpoints strictly inside I contribute their point values.
    auto bfirst = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), I.lo());
    for (auto it = bfirst; it != breakpoints_.end() && *it < I.hi(); ++it)
        take(breakpoint_value(static_cast<std::size_t>(it - breakpoints_.begin())));
    // Pieces whose open span meets I on a set with nonempty interior.
    const std::size_t first =
        static_cast<std::size_t>(std::lower_bound(breakpoints_.begin(), breakpoints_.end(), I.lo()) -
                                 breakpoints_.begin());
    for (std::size_t i = first; i < values_.size(); ++i) {
        const Interval span = piece_span(i);
        if (!(span.lo() < I.hi())) break;
        if (max(span.lo(), I.lo()) < min(span.hi(), I.hi())) take(values_[i]);
    }
    return {Interval(lo, hi), true};
}

Rational StepFunction::exact_integral(const Interval& I) const {
    Rational total(0);
    const std::size_t first =
        static_cast<std::size_t>(std::lower_bound(breakpoints_.begin(), breakpoints_.end(), I.lo()) -
                                 breakpoints_.begin());
    for (std::size_t i = first; i < values_.size(); ++i) {
        const Interval span = piece_span(i);
        if (!(span.lo() < I.hi())) break;
        const Rational lo = max(span.lo(), I.lo()), hi = min(span.hi(), I.hi());
        if (lo < hi) total += values_[i] * (hi - lo);
    }
    return total;
}

std::optional<DarbouxBounds> StepFunction::darboux_bounds(const Interval& I) const {
    const Rational v = exact_integral(I);
    return DarbouxBounds{Interval(v), Interval(v)};
}

std::vector<Rational> StepFunction::split_points(const Interval& I) const {
    std::vector<Rational> out;
    for (auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), I.lo());
         it != breakpoints_.end() && *it < I.hi(); ++it)
        out.push_back(*it);
    return out;
}

bool StepFunction::continuous_on_domain() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] != values_[0]) return false;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        if (breakpoint_value(i) != values_[0]) return false;
    return true;
}

std::vector<Rational> StepFunction::discontinuity_points() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& l = values_[i];
        const Rational& r = values_[i + 1];
        const Rational w = breakpoint_value(i);
        if (!(l == r && r == w)) out.push_back(breakpoints_[i]);
    }
    return out;
}

std::vector<Interval> StepFunction::zero_runs(const Interval& I) const {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i].is_zero()) continue;
        const Interval span = piece_span(i);
        const Rational lo = max(span.lo(), I.lo()), hi = min(span.hi(), I.hi());
        if (lo < hi) out.push_back(Interval(lo, hi));
    }
    return out;
}

std::optional<Rational> StepFunction::point_oscillation(const Rational& c) const {
    if (!domain_.contains_strictly(c)) return std::nullopt;
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), c);
    if (it == breakpoints_.end() || *it != c) return Rational(0); // interior of a piece
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    const Rational a = values_[i], b = values_[i + 1], w = breakpoint_value(i);
    return max(max(a, b), w) - min(min(a, b), w);
}

std::optional<Point> StepFunction::find_point_above(const Interval& I, const Rational& t,
                                                    bool strict) const {
    auto good = [&](const Rational& v) { return strict ? t < v : t <= v; };
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!good(values_[i])) continue;
        const Interval span = piece_span(i);
        const Rational lo = max(span.lo(), I.lo()), hi = min(span.hi(), I.hi());
        if (lo < hi) return Point::rational((lo + hi) / Rational(2));
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        if (I.contains_strictly(breakpoints_[i]) && good(breakpoint_value(i)))
            return Point::rational(breakpoints_[i]);
    return std::nullopt;
}

std::optional<Point> StepFunction::find_point_below(const Interval& I, const Rational& t,
                                                    bool strict) const {
    auto good = [&](const Rational& v) { return strict ? v < t : v <= t; };
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!good(values_[i])) continue;
        const Interval span = piece_span(i);
        const Rational lo = max(span.lo(), I.lo()), hi = min(span.hi(), I.hi());
        if (lo < hi) return Point::rational((lo + hi) / Rational(2));
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        if (I.contains_strictly(breakpoints_[i]) && good(breakpoint_value(i)))
            return Point::rational(breakpoints_[i]);
    return std::nullopt;
}

std::string StepFunction::spec_string() const {
    std::ostringstream os;
    os << "step " << domain_.lo() << " " << domain_.hi() << " bp=" << join_rationals(breakpoints_)
       << " vals=" << join_rationals(values_);
    if (has_explicit_breakpoint_values()) {
        os << " at=";
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
            if (i) os << ",";
            os << breakpoint_value(i);
        }
    }
    return os.str();
}

FuncModelPtr make_step(Interval domain, std::vector<Rational> breakpoints,
                       std::vector<Rational> values,
                       std::vector<std::optional<Rational>> breakpoint_values) {
    return std::make_shared<StepFunction>(std::move(domain), std::move(breakpoints),
                                          std::move(values), std::move(breakpoint_values));
}

FuncModelPtr make_constant(Interval domain, Rational value) {
    return make_step(std::move(domain), {}, {std::move(value)}, {});
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

std::vector<Rational> poly_trim(std::vector<Rational> cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return cs;
}

int poly_degree(const std::vector<Rational>& cs) { return static_cast<int>(cs.size()) - 1; }

Rational poly_eval(const std::vector<Rational>& cs, const Rational& x) {
    Rational acc(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rational> poly_derivative(const std::vector<Rational>& cs) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < cs.size(); ++i) d.push_back(cs[i] * Rational(static_cast<long>(i)));
    return poly_trim(std::move(d));
}

/// Exact antiderivative value at x (constant term 0).
Rational poly_antiderivative_at(const std::vector<Rational>& cs, const Rational& x) {
    Rational acc(0), xp = x;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        acc += cs[i] * xp / Rational(static_cast<long>(i + 1));
        xp *= x;
    }
    return acc;
}

Interval interval_horner(const std::vector<Rational>& cs, const Interval& X) {
    Interval acc(Rational(0));
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = add(mul(acc, X), Interval(*it));
    return acc;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class sn, sd;
    if (mpz_perfect_square_p(r.num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(r.den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), r.den().get_mpz_t());
    return Rational(sn, sd);
}

/// Divides (x - root) out of cs; cs(root) must be zero. Synthetic division:
/// q_{n-1} = c_n, then q_{i-1} = c_i + root * q_i.
std::vector<Rational> poly_deflate(const std::vector<Rational>& cs, const Rational& root) {
    std::vector<Rational> q(cs.size() - 1, Rational(0));
    Rational acc = cs.back();
    q[cs.size() - 2] = acc;
    for (std::size_t i = cs.size() - 2; i >= 1; --i) {
        acc = cs[i] + acc * root;
        q[i - 1] = acc;
    }
    return q;
}

std::vector<unsigned long> small_divisors(const mpz_class& zin) {
    std::vector<unsigned long> out;
    mpz_class z = ::abs(zin);
    if (!z.fits_ulong_p()) return out;
    const unsigned long n = z.get_ui();
    if (n == 0 || n > 1000000UL) return out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

/// Rational roots of cs, each listed once; `complete` reports whether these
/// are provably ALL real roots.
std::vector<Rational> poly_rational_roots(std::vector<Rational> cs, bool& complete) {
    complete = true;
    std::vector<Rational> roots;
    cs = poly_trim(std::move(cs));
    while (poly_degree(cs) > 0) {
        if (poly_degree(cs) == 1) {
            roots.push_back(-cs[0] / cs[1]);
            return roots;
        }
        if (cs[0].is_zero()) {
            roots.push_back(Rational(0));
            cs.erase(cs.begin());
            cs = poly_trim(std::move(cs));
            while (!cs.empty() && cs[0].is_zero()) cs.erase(cs.begin());
            continue;
        }
        if (poly_degree(cs) == 2) {
            const Rational &a = cs[2], &b = cs[1], &c = cs[0];
            const Rational disc = b * b - Rational(4) * a * c;
            if (disc.sign() < 0) return roots; // no further real roots
            auto s = exact_sqrt(disc);
            if (!s) {
                complete = false;
                return roots;
            }
            roots.push_back((-b - *s) / (Rational(2) * a));
            if (!s->is_zero()) roots.push_back((-b + *s) / (Rational(2) * a));
            return roots;
        }
        // Degree >= 3: rational root theorem over the integer-scaled poly,
        // feasible only for small leading/constant coefficients.
        mpz_class den_lcm(1);
        for (const auto& c : cs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        std::vector<mpz_class> zs;
        for (const auto& c : cs) zs.push_back(c.num() * (den_lcm / c.den()));
        const auto ps = small_divisors(zs.front());
        const auto qs = small_divisors(zs.back());
        if (ps.empty() || qs.empty()) {
            complete = false;
            return roots;
        }
        bool found = false;
        for (unsigned long p : ps) {
            for (unsigned long q : qs) {
                for (int sign : {1, -1}) {
                    const Rational cand(static_cast<long>(p) * sign, static_cast<long>(q));
                    if (poly_eval(cs, cand).is_zero()) {
                        roots.push_back(cand);
                        cs = poly_trim(poly_deflate(cs, cand));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            complete = false; // remaining factor may still have irrational real roots
            return roots;
        }
    }
    return roots;
}

Interval poly_bisect_enclosure(const std::vector<Rational>& cs, const Interval& seg, int depth) {
    if (depth <= 0 || seg.is_degenerate()) return interval_horner(cs, seg);
    const Rational m = seg.midpoint();
    return hull(poly_bisect_enclosure(cs, Interval(seg.lo(), m), depth - 1),
                poly_bisect_enclosure(cs, Interval(m, seg.hi()), depth - 1));
}

RangeResult poly_range(const std::vector<Rational>& cs0, const Interval& seg) {
    const std::vector<Rational> cs = poly_trim(cs0);
    if (seg.is_degenerate() || poly_degree(cs) <= 0) {
        const Rational v = poly_eval(cs, seg.lo());
        const Rational w = poly_eval(cs, seg.hi());
        return {Interval(min(v, w), max(v, w)), true};
    }
    std::vector<Rational> nodes{seg.lo(), seg.hi()};
    const auto d = poly_derivative(cs);
    bool roots_complete = false;
    for (const Rational& r : poly_rational_roots(d, roots_complete))
        if (seg.contains_strictly(r)) nodes.push_back(r);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    Rational lo = poly_eval(cs, nodes[0]), hi = lo;
    for (const Rational& n : nodes) {
        const Rational v = poly_eval(cs, n);
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    }
    bool exact = true;
    Interval cover(lo, hi);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const Interval piece(nodes[i], nodes[i + 1]);
        if (roots_complete) continue; // no critical point inside, monotone
        const Interval ds = interval_horner(d, piece);
        if (ds.lo().sign() >= 0 || ds.hi().sign() <= 0) continue; // monotone
        exact = false;
        cover = hull(cover, poly_bisect_enclosure(cs, piece, 9));
    }
    return exact ? RangeResult{Interval(lo, hi), true} : RangeResult{cover, false};
}

class PiecewisePolynomial final : public FuncModel {
public:
    explicit PiecewisePolynomial(std::vector<PolyPiece> pieces) : pieces_(std::move(pieces)) {
        if (pieces_.empty()) throw Error("piecewise polynomial needs at least one piece");
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            if (pieces_[i].sub.is_degenerate()) throw Error("degenerate polynomial piece");
            if (i > 0 && !(pieces_[i - 1].sub.hi() == pieces_[i].sub.lo()))
                throw Error("polynomial pieces must tile the domain contiguously");
        }
    }

    Interval domain() const override {
        return Interval(pieces_.front().sub.lo(), pieces_.back().sub.hi());
    }

    const std::vector<PolyPiece>& pieces() const { return pieces_; }

    std::vector<Rational> split_points(const Interval& I) const override {
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
            if (I.contains_strictly(pieces_[i].sub.hi())) out.push_back(pieces_[i].sub.hi());
        for (const auto& pc : pieces_) {
            bool complete = false;
            for (const Rational& r : poly_rational_roots(poly_derivative(pc.coeffs), complete))
                if (I.contains_strictly(r) && pc.sub.contains(r)) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override {
        Rational total(0);
        for (const auto& pc : pieces_) {
            const Rational lo = max(pc.sub.lo(), I.lo()), hi = min(pc.sub.hi(), I.hi());
            if (lo < hi)
                total += poly_antiderivative_at(pc.coeffs, hi) - poly_antiderivative_at(pc.coeffs, lo);
        }
        return DarbouxBounds{Interval(total), Interval(total)};
    }

    bool continuous_on_domain() const override {
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            const Rational x = pieces_[i].sub.hi();
            if (!(poly_eval(pieces_[i].coeffs, x) == poly_eval(pieces_[i + 1].coeffs, x)))
                return false;
        }
        return true;
    }

    std::vector<Rational> discontinuity_points() const override {
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            const Rational x = pieces_[i].sub.hi();
            if (!(poly_eval(pieces_[i].coeffs, x) == poly_eval(pieces_[i + 1].coeffs, x)))
                out.push_back(x);
        }
        return out;
    }

    std::vector<Interval> zero_runs(const Interval& I) const override {
        std::vector<Interval> out;
        for (const auto& pc : pieces_) {
            if (!poly_trim(pc.coeffs).empty()) continue;
            const Rational lo = max(pc.sub.lo(), I.lo()), hi = min(pc.sub.hi(), I.hi());
            if (lo < hi) out.push_back(Interval(lo, hi));
        }
        return out;
    }

    std::optional<Rational> point_oscillation(const Rational& c) const override {
        if (!domain().contains_strictly(c)) return std::nullopt;
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            if (pieces_[i].sub.hi() == c) {
                const Rational l = poly_eval(pieces_[i].coeffs, c);
                const Rational r = poly_eval(pieces_[i + 1].coeffs, c);
                return (l < r ? r - l : l - r);
            }
        }
        return Rational(0);
    }

    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override {
        return directed_search(I, t, strict, /*above=*/true);
    }

    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override {
        return directed_search(I, t, strict, /*above=*/false);
    }

    std::string spec_string() const override {
        std::ostringstream os;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            if (i) os << " ; ";
            else os << "poly ";
            os << pieces_[i].sub.lo() << " " << pieces_[i].sub.hi()
               << " coeffs=" << join_rationals(pieces_[i].coeffs);
        }
        return os.str();
    }

protected:
    Rational eval_rational(const Rational& x) const override {
        for (const auto& pc : pieces_)
            if (pc.sub.contains(x)) return poly_eval(pc.coeffs, x);
        throw OutOfDomainError(x.str());
    }

    RangeResult range_impl(const Interval& I) const override {
        bool exact = true;
        std::optional<Interval> acc;
        for (const auto& pc : pieces_) {
            const Rational lo = max(pc.sub.lo(), I.lo()), hi = min(pc.sub.hi(), I.hi());
            if (hi < lo) continue;
            const RangeResult r = poly_range(pc.coeffs, Interval(lo, hi));
            exact = exact && r.exact;
            acc = acc ? hull(*acc, r.bounds) : r.bounds;
        }
        if (!acc) throw OutOfDomainError("empty polynomial range query");
        return {*acc, exact};
    }

private:
    std::optional<Point> directed_search(const Interval& I, const Rational& t, bool strict,
                                         bool above) const {
        auto good = [&](const Rational& v) {
            return above ? (strict ? t < v : t <= v) : (strict ? v < t : v <= t);
        };
        if (I.is_degenerate()) return std::nullopt;
        // Probe candidates first, then recurse into the more promising half.
        Interval cur = I;
        for (int iter = 0; iter < 128; ++iter) {
            const Rational m = cur.midpoint();
            if (I.contains_strictly(m) && good(eval_rational(m))) return Point::rational(m);
            for (const Rational& s : split_points(cur))
                if (I.contains_strictly(s) && good(eval_rational(s))) return Point::rational(s);
            const Interval left(cur.lo(), m), right(m, cur.hi());
            const RangeResult rl = range_impl(left), rr = range_impl(right);
            const bool pick_left = above ? !(rl.bounds.hi() < rr.bounds.hi())
                                         : !(rr.bounds.lo() < rl.bounds.lo());
            cur = pick_left ? left : right;
        }
        return std::nullopt;
    }

    std::vector<PolyPiece> pieces_;
};

} // namespace

FuncModelPtr make_polynomial(Interval domain, std::vector<Rational> coeffs) {
    std::vector<PolyPiece> pieces;
    pieces.push_back(PolyPiece{std::move(domain), std::move(coeffs)});
    return std::make_shared<PiecewisePolynomial>(std::move(pieces));
}

FuncModelPtr make_piecewise_polynomial(std::vector<PolyPiece> pieces) {
    return std::make_shared<PiecewisePolynomial>(std::move(pieces));
}

// ---------------------------------------------------------------------------
// AbsShiftFunction

AbsShiftFunction::AbsShiftFunction(Interval domain, Rational center)
    : domain_(std::move(domain)), center_(std::move(center)) {}

Rational AbsShiftFunction::eval_rational(const Rational& x) const { return (x - center_).abs(); }

RangeResult AbsShiftFunction::range_impl(const Interval& I) const {
    const Rational dl = (I.lo() - center_).abs(), dh = (I.hi() - center_).abs();
    if (I.contains(center_)) return {Interval(Rational(0), max(dl, dh)), true};
    return {Interval(min(dl, dh), max(dl, dh)), true};
}

std::vector<Rational> AbsShiftFunction::split_points(const Interval& I) const {
    if (I.contains_strictly(center_)) return {center_};
    return {};
}

std::optional<DarbouxBounds> AbsShiftFunction::darboux_bounds(const Interval& I) const {
    // Exact area under |x - center| over I.
    auto half_sq = [](const Rational& r) { return r * r / Rational(2); };
    Rational v;
    if (center_ <= I.lo()) v = half_sq(I.hi() - center_) - half_sq(I.lo() - center_);
    else if (I.hi() <= center_) v = half_sq(center_ - I.lo()) - half_sq(center_ - I.hi());
    else v = half_sq(center_ - I.lo()) + half_sq(I.hi() - center_);
    return DarbouxBounds{Interval(v), Interval(v)};
}

std::optional<Rational> AbsShiftFunction::point_oscillation(const Rational& c) const {
    if (!domain_.contains_strictly(c)) return std::nullopt;
    return Rational(0);
}

std::optional<Point> AbsShiftFunction::find_point_above(const Interval& I, const Rational& t,
                                                        bool strict) const {
    auto good = [&](const Rational& v) { return strict ? t < v : t <= v; };
    // The two candidate regions hug the ends of I; probe near both ends.
    const Rational w = I.width();
    if (w.is_zero()) return std::nullopt;
    for (long den : {8L, 64L, 512L, 4096L}) {
        const Rational offs = w / Rational(den);
        for (const Rational& x : {I.lo() + offs, I.hi() - offs, I.midpoint()})
            if (I.contains_strictly(x) && good(eval_rational(x))) return Point::rational(x);
    }
    return std::nullopt;
}

std::optional<Point> AbsShiftFunction::find_point_below(const Interval& I, const Rational& t,
                                                        bool strict) const {
    auto good = [&](const Rational& v) { return strict ? v < t : v <= t; };
    // Smallest values sit nearest the center; clamp it into I and probe.
    Rational target = center_;
    if (target <= I.lo()) target = I.lo();
    if (I.hi() <= target) target = I.hi();
    const Rational w = I.width();
    if (w.is_zero()) return std::nullopt;
    for (long den : {8L, 64L, 512L, 4096L}) {
        const Rational offs = w / Rational(den);
        for (const Rational& x : {target, target + offs, target - offs, I.midpoint()})
            if (I.contains_strictly(x) && good(eval_rational(x))) return Point::rational(x);
    }
    return std::nullopt;
}

std::string AbsShiftFunction::spec_string() const {
    std::ostringstream os;
    os << "abs " << domain_.lo() << " " << domain_.hi() << " center=" << center_;
    return os.str();
}

FuncModelPtr make_abs_shift(Interval domain, Rational center) {
    return std::make_shared<AbsShiftFunction>(std::move(domain), std::move(center));
}

// ---------------------------------------------------------------------------
// FatCantorIndicator

namespace {

class FatCantorIndicator final : public FuncModel {
public:
    explicit FatCantorIndicator(FatCantorSetPtr set) : set_(std::move(set)) {
        removed_ = set_->removed_up_to_depth();
        std::sort(removed_.begin(), removed_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    }

    Interval domain() const override { return Interval(Rational(0), Rational(1)); }

    std::vector<Rational> split_points(const Interval& I) const override {
        std::vector<Rational> out;
        for (const Interval& iv : set_->deepest().kept) {
            if (I.hi() < iv.lo()) break;
            if (I.contains_strictly(iv.lo())) out.push_back(iv.lo());
            if (I.contains_strictly(iv.hi())) out.push_back(iv.hi());
        }
        return out;
    }

    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override {
        if (I.is_degenerate())
            return DarbouxBounds{Interval(Rational(0)), Interval(Rational(0))};
        // Lower Darboux integral of the limit-set indicator is exactly 0:
        // the limit set is nowhere dense, so every nondegenerate cell has
        // infimum 0. The upper integral equals the measure of limit ∩ I,
        // squeezed between the cover measure minus the tail and the cover
        // measure.
        const Rational m = set_->cover_measure(I);
        Rational lo = m - set_->tail_slack();
        if (lo < Rational(0)) lo = Rational(0);
        return DarbouxBounds{Interval(Rational(0)), Interval(lo, m)};
    }

    std::optional<Interval> ideal_integral(const Interval& I) const override {
        return darboux_bounds(I)->upper_integral;
    }

    std::vector<Interval> zero_runs(const Interval& I) const override {
        std::vector<Interval> out;
        auto it = std::lower_bound(removed_.begin(), removed_.end(), I.lo(),
                                   [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
        for (; it != removed_.end() && it->lo() < I.hi(); ++it) {
            const Rational lo = max(it->lo(), I.lo()), hi = min(it->hi(), I.hi());
            if (lo < hi) out.push_back(Interval(lo, hi));
        }
        return out;
    }

    std::optional<Rational> point_oscillation(const Rational& c) const override {
        if (!domain().contains_strictly(c)) return std::nullopt;
        for (const Interval& gap : removed_)
            if (gap.contains_strictly(c)) return Rational(0);
        return std::nullopt;
    }

    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override {
        const bool zero_ok = strict ? Rational(0) > t : Rational(0) >= t;
        const bool one_ok = strict ? Rational(1) > t : Rational(1) >= t;
        if (zero_ok) {
            if (auto p = off_cover_point(I)) return p;
        }
        if (one_ok) {
            if (auto p = cover_point(I)) return p;
        }
        return std::nullopt;
    }

    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override {
        const bool zero_ok = strict ? Rational(0) < t : Rational(0) <= t;
        const bool one_ok = strict ? Rational(1) < t : Rational(1) <= t;
        if (zero_ok) {
            if (auto p = off_cover_point(I)) return p;
        }
        if (one_ok) {
            if (auto p = cover_point(I)) return p;
        }
        return std::nullopt;
    }

    std::string spec_string() const override {
        std::ostringstream os;
        os << "fatcantor depth=" << set_->depth();
        if (!(set_->spec().ratio() == Rational(1, 4))) os << " ratio=" << set_->spec().ratio();
        return os.str();
    }

    const FatCantorSetPtr& set() const { return set_; }

protected:
    Rational eval_rational(const Rational& x) const override {
        return set_->cover_contains(x) ? Rational(1) : Rational(0);
    }

    RangeResult range_impl(const Interval& I) const override {
        if (!set_->cover_meets(I)) return {Interval(Rational(0)), true};
        if (I.is_degenerate()) return {Interval(Rational(0), Rational(1)), false};
        // Exact iff both bounds are provably inf/sup of the limit-set
        // indicator: 1 is attained at kept-interval endpoints (they survive
        // every stage), and 0 is the infimum on any nondegenerate interval
        // because the limit set is nowhere dense.
        return {Interval(Rational(0), Rational(1)), set_->contains_kept_endpoint(I)};
    }

private:
    std::optional<Point> cover_point(const Interval& I) const {
        for (const Interval& iv : set_->deepest().kept) {
            if (I.hi() < iv.lo()) break;
            const Rational lo = max(iv.lo(), I.lo()), hi = min(iv.hi(), I.hi());
            if (lo < hi) {
                const Rational m = (lo + hi) / Rational(2);
                if (I.contains_strictly(m)) return Point::rational(m);
            } else if (lo == hi && I.contains_strictly(lo)) {
                return Point::rational(lo);
            }
        }
        return std::nullopt;
    }

    std::optional<Point> off_cover_point(const Interval& I) const {
        for (const Interval& gap : zero_runs(I)) {
            const Rational m = gap.midpoint();
            if (I.contains_strictly(m)) return Point::rational(m);
        }
        return std::nullopt;
    }

    FatCantorSetPtr set_;
    std::vector<Interval> removed_;
};

} // namespace

FuncModelPtr make_fat_cantor_indicator(FatCantorSpec spec, std::size_t depth) {
    return make_fat_cantor_indicator(std::make_shared<FatCantorSet>(std::move(spec), depth));
}

FuncModelPtr make_fat_cantor_indicator(FatCantorSetPtr set) {
    return std::make_shared<FatCantorIndicator>(std::move(set));
}

FuncModelPtr make_fat_cantor_cover_step(const FatCantorSetPtr& set) {
    const auto& kept = set->deepest().kept;
    std::vector<Rational> bps, vals;
    std::vector<std::optional<Rational>> at;
    vals.push_back(Rational(1));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (i > 0) {
            bps.push_back(kept[i].lo());
            at.push_back(Rational(1));
            vals.push_back(Rational(1));
        }
        if (i + 1 < kept.size()) {
            bps.push_back(kept[i].hi());
            at.push_back(Rational(1));
            vals.push_back(Rational(0));
        }
    }
    return make_step(Interval(Rational(0), Rational(1)), std::move(bps), std::move(vals),
                     std::move(at));
}

// ---------------------------------------------------------------------------
// Pathological

namespace {

mpz_class next_prime_at_least(mpz_class n) {
    if (n < 2) n = 2;
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), mpz_class(n - 1).get_mpz_t());
    return p;
}

class PathologicalFunction final : public FuncModel {
public:
    explicit PathologicalFunction(Interval domain) : domain_(std::move(domain)) {
        if (!(Interval(Rational(0), Rational(1)).contains(domain_)))
            throw Error("pathological model lives inside [0,1]");
        if (domain_.is_degenerate()) throw Error("pathological model needs a nondegenerate domain");
    }

    Interval domain() const override { return domain_; }

    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override {
        if (I.is_degenerate())
            return DarbouxBounds{Interval(Rational(0)), Interval(Rational(0))};
        // On every nondegenerate subinterval the infimum is 0 (rationals of
        // large denominator are dense) and the supremum is 1 (pi-rationals of
        // large denominator are dense), so every lower sum is 0 and every
        // upper sum equals the length.
        return DarbouxBounds{Interval(Rational(0)), Interval(I.width())};
    }

    std::optional<Rational> point_oscillation(const Rational& c) const override {
        if (!domain_.contains_strictly(c)) return std::nullopt;
        return Rational(1);
    }

    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override {
        if (I.is_degenerate()) return std::nullopt;
        // Use a pi-rational point with 1 - 1/q above t; impossible once t
        // reaches 1, since every value stays below 1.
        const Rational one_minus = Rational(1) - t;
        if (one_minus.sign() <= 0) return std::nullopt;
        mpz_class qmin(5);
        // strict: q > 1/(1-t); non-strict: q >= 1/(1-t).
        mpz_class q = one_minus.den() / one_minus.num(); // floor(1/(1-t))
        if (strict || mpz_class(one_minus.den() % one_minus.num()) != 0) q += 1;
        if (q > qmin) qmin = q;
        return pi_point_in(I, qmin);
    }

    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override {
        if (I.is_degenerate()) return std::nullopt;
        if (t.sign() < 0 || (strict && t.sign() == 0)) return std::nullopt;
        // Use a rational point p/q with 1/q below t; q prime keeps p/q reduced.
        mpz_class qmin(3);
        if (t.sign() > 0) {
            mpz_class q = t.den() / t.num(); // floor(1/t)
            if (strict || mpz_class(t.den() % t.num()) != 0) q += 1;
            if (q > qmin) qmin = q;
        } else {
            return std::nullopt; // t == 0 non-strict: values are positive
        }
        const Rational two_over_w = Rational(2) / I.width();
        const mpz_class qwidth = two_over_w.num() / two_over_w.den() + 2;
        if (qwidth > qmin) qmin = qwidth;
        const mpz_class q = next_prime_at_least(qmin);
        // Smallest p with p/q > I.lo(); then p/q <= I.lo() + 1/q < I.hi().
        mpz_class p;
        mpz_fdiv_q(p.get_mpz_t(), mpz_class(I.lo().num() * q).get_mpz_t(),
                   I.lo().den().get_mpz_t());
        p += 1;
        const Rational x(p, q);
        if (!I.contains_strictly(x)) return std::nullopt;
        return Point::rational(x);
    }

    std::string spec_string() const override {
        if (domain_ == Interval(Rational(0), Rational(1))) return "patho";
        std::ostringstream os;
        os << "patho " << domain_.lo() << " " << domain_.hi();
        return os.str();
    }

protected:
    bool supports_pi_points() const override { return true; }

    Rational eval_rational(const Rational& x) const override {
        if (x.den() == 1) return Rational(1, 2); // integer endpoints sit outside the enumeration
        return Rational(mpz_class(1), x.den());
    }

    Rational eval_pi_rational(const mpz_class&, const mpz_class& q) const override {
        return Rational(1) - Rational(mpz_class(1), q);
    }

    RangeResult range_impl(const Interval& I) const override {
        if (I.is_degenerate()) {
            const Rational v = eval_rational(I.lo());
            return {Interval(v, v), true};
        }
        return {Interval(Rational(0), Rational(1)), true};
    }

private:
    std::optional<Point> pi_point_in(const Interval& I, const mpz_class& qmin) const {
        // Need q with an integer p in (lo*q/pi, hi*q/pi); q > pi/(hi - lo)
        // guarantees the window has length > 1.
        const Rational w = I.width();
        const Rational pi_hi(mpz_class("3141592653589793238462643383280"),
                             mpz_class("1000000000000000000000000000000"));
        const Rational pi_lo(mpz_class("3141592653589793238462643383279"),
                             mpz_class("1000000000000000000000000000000"));
        const Rational need = pi_hi / w;
        mpz_class q0 = need.num() / need.den() + 2;
        if (q0 < qmin) q0 = qmin;
        mpz_class q = next_prime_at_least(q0);
        for (int attempts = 0; attempts < 8; ++attempts) {
            // Smallest p with pi*p/q > lo: p = floor(lo*q/pi_lo) + 1.
            const Rational bound = I.lo() * Rational(q, mpz_class(1)) / pi_lo;
            mpz_class p;
            mpz_fdiv_q(p.get_mpz_t(), bound.num().get_mpz_t(), bound.den().get_mpz_t());
            p += 1;
            if (p < 1) p = 1;
            if (compare_with_pi_multiple(I.lo(), p, q) == Ordering::LT &&
                compare_with_pi_multiple(I.hi(), p, q) == Ordering::GT)
                return Point::pi_rational(p, q);
            q = next_prime_at_least(q + 1);
        }
        return std::nullopt;
    }

    Interval domain_;
};

} // namespace

FuncModelPtr make_pathological() { return make_pathological(Interval(Rational(0), Rational(1))); }

FuncModelPtr make_pathological(Interval domain) {
    return std::make_shared<PathologicalFunction>(std::move(domain));
}

// ---------------------------------------------------------------------------
// AffineImage

namespace {

Interval scale_interval(const Interval& I, const Rational& s, const Rational& o) {
    const Rational a = s * I.lo() + o, b = s * I.hi() + o;
    return Interval(min(a, b), max(a, b));
}

class AffineImage final : public FuncModel {
public:
    AffineImage(FuncModelPtr inner, Rational scale, Rational offset)
        : inner_(std::move(inner)), scale_(std::move(scale)), offset_(std::move(offset)) {
        if (!inner_) throw Error("affine image needs an inner model");
    }

    Interval domain() const override { return inner_->domain(); }

    std::vector<Rational> split_points(const Interval& I) const override {
        return inner_->split_points(I);
    }

    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override {
        if (scale_.is_zero()) {
            const Rational v = offset_ * I.width();
            return DarbouxBounds{Interval(v), Interval(v)};
        }
        auto db = inner_->darboux_bounds(I);
        if (!db) return std::nullopt;
        const Rational ow = offset_ * I.width();
        const Interval lo_img = scale_interval(db->lower_integral, scale_, ow);
        const Interval hi_img = scale_interval(db->upper_integral, scale_, ow);
        // Negative scale swaps the roles of the lower and upper integrals.
        if (scale_.sign() < 0) return DarbouxBounds{hi_img, lo_img};
        return DarbouxBounds{lo_img, hi_img};
    }

    std::optional<Interval> ideal_integral(const Interval& I) const override {
        if (scale_.is_zero()) return Interval(offset_ * I.width());
        auto inner = inner_->ideal_integral(I);
        if (!inner) return std::nullopt;
        return scale_interval(*inner, scale_, offset_ * I.width());
    }

    bool continuous_on_domain() const override {
        return scale_.is_zero() || inner_->continuous_on_domain();
    }

    std::vector<Rational> discontinuity_points() const override {
        if (scale_.is_zero()) return {};
        return inner_->discontinuity_points();
    }

    std::vector<Interval> zero_runs(const Interval& I) const override {
        if (scale_.is_zero()) {
            if (offset_.is_zero()) return {I};
            return {};
        }
        if (offset_.is_zero()) return inner_->zero_runs(I);
        return {};
    }

    std::optional<Rational> point_oscillation(const Rational& c) const override {
        if (scale_.is_zero()) return Rational(0);
        auto w = inner_->point_oscillation(c);
        if (!w) return std::nullopt;
        return scale_.abs() * *w;
    }

    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override {
        if (scale_.is_zero()) {
            const bool ok = strict ? t < offset_ : t <= offset_;
            if (ok && !I.is_degenerate()) return Point::rational(I.midpoint());
            return std::nullopt;
        }
        const Rational u = (t - offset_) / scale_;
        return scale_.sign() > 0 ? inner_->find_point_above(I, u, strict)
                                 : inner_->find_point_below(I, u, strict);
    }

    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override {
        if (scale_.is_zero()) {
            const bool ok = strict ? offset_ < t : offset_ <= t;
            if (ok && !I.is_degenerate()) return Point::rational(I.midpoint());
            return std::nullopt;
        }
        const Rational u = (t - offset_) / scale_;
        return scale_.sign() > 0 ? inner_->find_point_below(I, u, strict)
                                 : inner_->find_point_above(I, u, strict);
    }

    std::string spec_string() const override {
        std::ostringstream os;
        os << "affine scale=" << scale_ << " offset=" << offset_ << " ( " << inner_->spec_string()
           << " )";
        return os.str();
    }

protected:
    bool supports_pi_points() const override { return true; }

    Rational eval_rational(const Rational& x) const override {
        return scale_ * inner_->eval(Point::rational(x)) + offset_;
    }

    Rational eval_pi_rational(const mpz_class& p, const mpz_class& q) const override {
        return scale_ * inner_->eval(Point::pi_rational(p, q)) + offset_;
    }

    RangeResult range_impl(const Interval& I) const override {
        const RangeResult r = inner_->range(I);
        return {scale_interval(r.bounds, scale_, offset_), r.exact};
    }

private:
    FuncModelPtr inner_;
    Rational scale_, offset_;
};

} // namespace

FuncModelPtr make_affine_image(FuncModelPtr inner, Rational scale, Rational offset) {
    return std::make_shared<AffineImage>(std::move(inner), std::move(scale), std::move(offset));
}

// ---------------------------------------------------------------------------
// Glued

namespace {

class GluedFunction final : public FuncModel {
public:
    explicit GluedFunction(std::vector<FuncModelPtr> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw Error("glued model needs at least one part");
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (!(parts_[i]->domain().hi() == parts_[i + 1]->domain().lo()))
                throw Error("glued parts must tile the domain contiguously");
    }

    Interval domain() const override {
        return Interval(parts_.front()->domain().lo(), parts_.back()->domain().hi());
    }

    std::vector<Rational> split_points(const Interval& I) const override {
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (I.contains_strictly(parts_[i]->domain().hi()))
                out.push_back(parts_[i]->domain().hi());
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            for (const Rational& s : p->split_points(*seg))
                if (I.contains_strictly(s)) out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::optional<DarbouxBounds> darboux_bounds(const Interval& I) const override {
        Interval lo_acc(Rational(0)), hi_acc(Rational(0));
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            auto db = p->darboux_bounds(*seg);
            if (!db) return std::nullopt;
            lo_acc = add(lo_acc, db->lower_integral);
            hi_acc = add(hi_acc, db->upper_integral);
        }
        return DarbouxBounds{lo_acc, hi_acc};
    }

    std::optional<Interval> ideal_integral(const Interval& I) const override {
        Interval acc(Rational(0));
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            auto v = p->ideal_integral(*seg);
            if (!v) return std::nullopt;
            acc = add(acc, *v);
        }
        return acc;
    }

    bool continuous_on_domain() const override {
        for (const auto& p : parts_)
            if (!p->continuous_on_domain()) return false;
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            const Rational bd = parts_[i]->domain().hi();
            if (!(parts_[i]->eval(Point::rational(bd)) == parts_[i + 1]->eval(Point::rational(bd))))
                return false;
        }
        return true;
    }

    std::vector<Rational> discontinuity_points() const override {
        std::vector<Rational> out;
        for (const auto& p : parts_)
            for (const Rational& d : p->discontinuity_points()) out.push_back(d);
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            const Rational bd = parts_[i]->domain().hi();
            if (!(parts_[i]->eval(Point::rational(bd)) == parts_[i + 1]->eval(Point::rational(bd))))
                out.push_back(bd);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Interval> zero_runs(const Interval& I) const override {
        std::vector<Interval> out;
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            for (const Interval& r : p->zero_runs(*seg)) out.push_back(r);
        }
        return out;
    }

    std::optional<Rational> point_oscillation(const Rational& c) const override {
        for (const auto& p : parts_)
            if (p->domain().contains_strictly(c)) return p->point_oscillation(c);
        return std::nullopt;
    }

    std::optional<Point> find_point_above(const Interval& I, const Rational& t,
                                          bool strict) const override {
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            if (auto pt = p->find_point_above(*seg, t, strict)) return pt;
        }
        return std::nullopt;
    }

    std::optional<Point> find_point_below(const Interval& I, const Rational& t,
                                          bool strict) const override {
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg || seg->is_degenerate()) continue;
            if (auto pt = p->find_point_below(*seg, t, strict)) return pt;
        }
        return std::nullopt;
    }

    std::string spec_string() const override {
        std::ostringstream os;
        os << "glue (";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << " |";
            os << " " << parts_[i]->spec_string();
        }
        os << " )";
        return os.str();
    }

protected:
    bool supports_pi_points() const override { return true; }

    Rational eval_rational(const Rational& x) const override {
        for (const auto& p : parts_)
            if (p->domain().contains(x)) return p->eval(Point::rational(x));
        throw OutOfDomainError(x.str());
    }

    Rational eval_pi_rational(const mpz_class& p, const mpz_class& q) const override {
        for (const auto& part : parts_) {
            if (compare_with_pi_multiple(part->domain().hi(), p, q) == Ordering::GT &&
                compare_with_pi_multiple(part->domain().lo(), p, q) == Ordering::LT)
                return part->eval(Point::pi_rational(p, q));
        }
        throw OutOfDomainError("pi*" + mpz_class(p).get_str() + "/" + mpz_class(q).get_str());
    }

    RangeResult range_impl(const Interval& I) const override {
        bool exact = true;
        std::optional<Interval> acc;
        for (const auto& p : parts_) {
            auto seg = intersect(p->domain(), I);
            if (!seg) continue;
            const RangeResult r = p->range(*seg);
            exact = exact && r.exact;
            acc = acc ? hull(*acc, r.bounds) : r.bounds;
        }
        if (!acc) throw OutOfDomainError("empty glued range query");
        return {*acc, exact};
    }

private:
    std::vector<FuncModelPtr> parts_;
};

} // namespace

FuncModelPtr make_glued(std::vector<FuncModelPtr> parts) {
    return std::make_shared<GluedFunction>(std::move(parts));
}

const StepFunction* as_step(const FuncModel& f) { return dynamic_cast<const StepFunction*>(&f); }

const AbsShiftFunction* as_abs_shift(const FuncModel& f) {
    return dynamic_cast<const AbsShiftFunction*>(&f);
}

} // namespace certint
