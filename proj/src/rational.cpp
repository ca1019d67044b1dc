#include "shuhan/rational.hpp"

#include <cmath>
#include <ostream>

#include "shuhan/errors.hpp"

namespace shuhan {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto digits_only = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits_only(num_text) || !digits_only(den_text)) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational Rational::from_double(long double value)
{
    if (!std::isfinite(value)) {
        throw InvalidArgument("non-finite floating-point value");
    }
    if (value == 0) {
        return Rational();
    }
    int exponent = 0;
    long double mantissa = std::frexp(value, &exponent);
    // 64 bits covers the x87 extended mantissa; the scaled value is an exact integer.
    Integer m;
    const bool negative = mantissa < 0;
    long double scaled = std::ldexp(negative ? -mantissa : mantissa, 64);
    const auto hi = static_cast<unsigned long>(std::ldexp(scaled, -32));
    const auto lo = static_cast<unsigned long>(scaled - std::ldexp(static_cast<long double>(hi), 32));
    m = Integer(hi);
    m <<= 32;
    m += Integer(lo);
    if (negative) {
        m = -m;
    }
    return Rational(m) * pow2(exponent - 64);
}

Rational Rational::pow2(long exponent)
{
    Integer p = 1;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw InvalidArgument("inverse of zero");
    }
    return Rational(den(), num());
}

Rational Rational::pow(unsigned exponent) const
{
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw InvalidArgument("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

long double Rational::to_long_double() const
{
    if (is_zero()) {
        return 0.0L;
    }
    // Scale so the truncated quotient carries about 70 bits, more than the 64-bit mantissa.
    const long shift = 70 - static_cast<long>(mpz_sizeinbase(q_.get_num_mpz_t(), 2))
                     + static_cast<long>(mpz_sizeinbase(q_.get_den_mpz_t(), 2));
    Integer scaled = q_.get_num();
    mpz_abs(scaled.get_mpz_t(), scaled.get_mpz_t());
    if (shift >= 0) {
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(shift));
    } else {
        mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q_.get_den_mpz_t());
    Integer high;
    Integer low;
    mpz_fdiv_q_2exp(high.get_mpz_t(), scaled.get_mpz_t(), 35);
    mpz_fdiv_r_2exp(low.get_mpz_t(), scaled.get_mpz_t(), 35);
    long double value = std::ldexp(static_cast<long double>(high.get_ui()), 35)
                      + static_cast<long double>(low.get_ui());
    value = std::ldexp(value, static_cast<int>(-shift));
    return sign() < 0 ? -value : value;
}

std::string Rational::str() const
{
    return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
}

std::string Rational::decimal(int digits) const
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled = q_.get_num() * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q_.get_den_mpz_t());
    const bool negative = sign() < 0;
    std::string body = (negative ? Integer(-scaled) : scaled).get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + body : body;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

namespace {

Rational floor_of(const Rational& r)
{
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(f);
}

} // namespace

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (hi < lo) {
        return simplest_between(hi, lo);
    }
    if (lo.sign() <= 0 && hi.sign() >= 0) {
        return Rational();
    }
    if (hi.sign() < 0) {
        return -simplest_between(-hi, -lo);
    }
    const Rational f = floor_of(lo);
    if (f == lo) {
        return lo;
    }
    if (f + 1 <= hi) {
        return f + 1;
    }
    // f < lo <= hi < f + 1: recurse on the reciprocal of the fractional parts.
    return f + simplest_between((hi - f).inverse(), (lo - f).inverse()).inverse();
}

} // namespace shuhan
