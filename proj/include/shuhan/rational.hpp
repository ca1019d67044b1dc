#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shuhan {

using Integer = mpz_class;

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonical, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    explicit Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& value) : q_(value) { q_.canonicalize(); }

    /// Parses "p/q" or "p" (optional sign, decimal digits only).
    static Rational parse(std::string_view text);
    /// Exact value of a finite binary floating-point number.
    static Rational from_double(long double value);
    /// 2^exponent, for any sign of exponent.
    static Rational pow2(long exponent);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    /// Truncated decimal expansion with `digits` digits after the point.
    std::string decimal(int digits) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// The rational with the smallest denominator in [lo, hi] (then smallest |numerator|).
Rational simplest_between(const Rational& lo, const Rational& hi);

/// lcm of the denominators of a range of rationals.
template <typename Range>
Integer common_denominator(const Range& values)
{
    Integer l = 1;
    for (const Rational& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    }
    return l;
}

} // namespace shuhan

template <>
struct std::hash<shuhan::Rational> {
    std::size_t operator()(const shuhan::Rational& r) const
    {
        return std::hash<std::string>{}(r.str());
    }
};
