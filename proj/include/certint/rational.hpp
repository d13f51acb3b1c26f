#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "certint/errors.hpp"

namespace certint {

/**
 * Exact rational scalar.
 *
 * Always kept in lowest terms with a positive denominator, so equality is
 * structural and arithmetic never rounds. This is the only scalar type used
 * on certified paths; decimal output is rendered on demand and is explicitly
 * non-certified.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                 // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses `p/q`, an integer, or a finite decimal/scientific literal
    /// (e.g. "-3/4", "17", "0.125", "1e-12"). Anything else is rejected.
    static Rational from_string(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational abs() const;

    /// Exact rendering, `p/q` (or just `p` for integers).
    std::string str() const;

    /// Decimal rendering with `digits` fractional digits, truncated toward
    /// zero. Not certified; never used on certified paths.
    std::string decimal(std::size_t digits = 12) const;

    /// 2^e for e possibly negative.
    static Rational pow2(long e);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

enum class Ordering { LT, EQ, GT };

/// Exact total-order comparison (cross-multiplication under the hood).
Ordering compare(const Rational& a, const Rational& b);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Decides `a <=> pi * p/q` exactly for the p, q magnitudes that occur in
/// practice, via hard-coded high-precision rational bounds on pi. Equality is
/// impossible (pi is irrational); throws if the stored precision cannot
/// separate the operands.
Ordering compare_with_pi_multiple(const Rational& a, const mpz_class& p, const mpz_class& q);

} // namespace certint
