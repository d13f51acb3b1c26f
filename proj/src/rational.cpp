#include "certint/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace certint {

namespace {

// pi to 30 fractional digits, truncated / rounded up. Enough to separate
// pi*p/q from any rational with numerator and denominator below ~10^14.
const mpz_class kPiScale("1000000000000000000000000000000");
const mpz_class kPiLoNum("3141592653589793238462643383279");
const mpz_class kPiHiNum("3141592653589793238462643383280");

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::from_string(std::string_view text) {
    auto fail = [&]() -> Rational { throw ParseError("not an exact rational: '" + std::string(text) + "'"); };
    if (text.empty()) return fail();

    std::string s(text);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string ns = s.substr(0, slash);
        const std::string ds = s.substr(slash + 1);
        auto is_int = [](const std::string& t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        if (!is_int(ns) || !is_int(ds)) return fail();
        mpz_class num, den;
        if (mpz_set_str(num.get_mpz_t(), ns.c_str(), 10) != 0) return fail();
        if (mpz_set_str(den.get_mpz_t(), ds.c_str(), 10) != 0) return fail();
        if (den == 0) return fail();
        return Rational(num, den);
    }

    // Integer, decimal, or scientific literal with a finite expansion.
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    long expo = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { eneg = (s[i] == '-'); ++i; }
        std::string es;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
        if (es.empty() || es.size() > 5) return fail();
        expo = std::stol(es);
        if (eneg) expo = -expo;
    }
    if (i != s.size()) return fail();
    if (intpart.empty() && fracpart.empty()) return fail();

    mpz_class mantissa;
    // Base forced to 10: the auto-detecting constructor reads a leading zero
    // as octal.
    if (mpz_set_str(mantissa.get_mpz_t(), ((intpart.empty() ? "0" : intpart) + fracpart).c_str(),
                    10) != 0)
        return fail();
    long shift = expo - static_cast<long>(fracpart.size());
    mpz_class num = mantissa, den = 1;
    if (shift > 0) {
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p10;
    } else if (shift < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    }
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << q_.get_num();
    if (q_.get_den() != 1) os << "/" << q_.get_den();
    return os.str();
}

std::string Rational::decimal(std::size_t digits) const {
    mpz_class n = num(), d = den();
    const bool neg = n < 0;
    if (neg) n = -n;
    mpz_class ip = n / d, rem = n % d;
    std::ostringstream os;
    if (neg) os << "-";
    os << ip;
    if (digits > 0) {
        os << ".";
        for (std::size_t k = 0; k < digits; ++k) {
            rem *= 10;
            os << (rem / d);
            rem %= d;
        }
    }
    return os.str();
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p, 1) : Rational(1, p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Ordering compare(const Rational& a, const Rational& b) {
    const auto c = a <=> b;
    if (c == std::strong_ordering::less) return Ordering::LT;
    if (c == std::strong_ordering::greater) return Ordering::GT;
    return Ordering::EQ;
}

Ordering compare_with_pi_multiple(const Rational& a, const mpz_class& p, const mpz_class& q) {
    if (q <= 0) throw Error("pi multiple with nonpositive denominator");
    if (p == 0) return compare(a, Rational(0));
    // a vs pi*p/q  <=>  a.num*q*S vs (pi*S)*p*a.den with S = kPiScale and
    // pi*S strictly between kPiLoNum and kPiHiNum. Equality cannot occur.
    const mpz_class lhs = a.num() * q * kPiScale;
    const mpz_class rlo = (p > 0 ? kPiLoNum : kPiHiNum) * p * a.den();
    const mpz_class rhi = (p > 0 ? kPiHiNum : kPiLoNum) * p * a.den();
    if (lhs <= rlo) return Ordering::LT;
    if (lhs >= rhi) return Ordering::GT;
    throw Error("pi bounds too coarse to compare; widen kPi bounds");
}

} // namespace certint
