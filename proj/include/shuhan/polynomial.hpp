#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shuhan/rational.hpp"

namespace shuhan {

/// Univariate polynomial with rational coefficients, ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> ascending);
    PolynomialQ(std::initializer_list<Rational> ascending);

    static PolynomialQ constant(const Rational& c);
    /// The variable itself.
    static PolynomialQ x();
    /// Newton-form interpolation through (nodes[i], values[i]); nodes must be distinct.
    static PolynomialQ interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    long double eval(long double x) const;
    /// Sign of p just to the right of x: the sign of the first nonzero Taylor coefficient at x.
    int sign_right_of(const Rational& x) const;

    PolynomialQ derivative() const;
    PolynomialQ monic() const;
    /// p(-x).
    PolynomialQ reflected() const;
    /// p(inner(x)).
    PolynomialQ compose(const PolynomialQ& inner) const;
    /// p(x + a) coefficients.
    PolynomialQ shifted(const Rational& a) const;
    /// Integer coefficients with gcd 1 and the same sign as the leading coefficient.
    std::vector<Integer> primitive_integer_coeffs() const;

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& divisor) const;

    PolynomialQ& operator+=(const PolynomialQ& o);
    PolynomialQ& operator-=(const PolynomialQ& o);
    PolynomialQ& operator*=(const PolynomialQ& o);
    PolynomialQ& operator*=(const Rational& s);
    friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
    friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
    friend PolynomialQ operator*(PolynomialQ a, const PolynomialQ& b) { return a *= b; }
    friend PolynomialQ operator*(PolynomialQ a, const Rational& s) { return a *= s; }
    friend PolynomialQ operator*(const Rational& s, PolynomialQ a) { return a *= s; }
    friend PolynomialQ operator-(const PolynomialQ& a) { return a * Rational(-1); }

    friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

    /// Human-readable form in the given variable, highest degree first.
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; zero only if both inputs are zero.
PolynomialQ gcd(const PolynomialQ& a, const PolynomialQ& b);

/// Determinant of the Sylvester matrix.
Rational resultant(const PolynomialQ& a, const PolynomialQ& b);

/// (-1)^(n(n-1)/2) Res(p, p') / lead(p).
Rational discriminant(const PolynomialQ& p);

/// Every rational u/v with u | constant term and v | leading coefficient of the
/// primitive integer form, both signs. A zero constant term contributes 0.
std::vector<Rational> rational_root_candidates(const PolynomialQ& p);

/// The rational roots of p (each once), ascending.
std::vector<Rational> rational_roots(const PolynomialQ& p);

/// Positive divisors of a nonzero integer, ascending (trial division).
std::vector<Integer> positive_divisors(const Integer& value);

} // namespace shuhan
