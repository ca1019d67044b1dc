#include "shuhan/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"

namespace shuhan {

PolynomialQ::PolynomialQ(std::vector<Rational> ascending) : c_(std::move(ascending))
{
    trim();
}

PolynomialQ::PolynomialQ(std::initializer_list<Rational> ascending) : c_(ascending)
{
    trim();
}

void PolynomialQ::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

PolynomialQ PolynomialQ::constant(const Rational& c)
{
    return PolynomialQ({c});
}

PolynomialQ PolynomialQ::x()
{
    return PolynomialQ({Rational(0), Rational(1)});
}

PolynomialQ PolynomialQ::interpolate(std::span<const Rational> nodes, std::span<const Rational> values)
{
    if (nodes.size() != values.size() || nodes.empty()) {
        throw InvalidArgument("interpolation needs equally many nodes and values");
    }
    // Divided differences in place.
    std::vector<Rational> dd(values.begin(), values.end());
    const std::size_t n = nodes.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = nodes[i] - nodes[i - level];
            if (span.is_zero()) {
                throw InvalidArgument("interpolation nodes must be distinct");
            }
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    // Horner on the Newton form.
    PolynomialQ result = constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        result *= PolynomialQ({-nodes[k], Rational(1)});
        result += constant(dd[k]);
    }
    return result;
}

Rational PolynomialQ::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

long double PolynomialQ::eval(long double x) const
{
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + it->to_long_double();
    }
    return acc;
}

int PolynomialQ::sign_right_of(const Rational& x) const
{
    const PolynomialQ local = shifted(x);
    for (const Rational& c : local.coeffs()) {
        if (!c.is_zero()) {
            return c.sign();
        }
    }
    return 0;
}

PolynomialQ PolynomialQ::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    }
    return PolynomialQ(std::move(d));
}

PolynomialQ PolynomialQ::monic() const
{
    if (is_zero()) {
        return {};
    }
    return *this * leading().inverse();
}

PolynomialQ PolynomialQ::reflected() const
{
    std::vector<Rational> r = c_;
    for (std::size_t k = 1; k < r.size(); k += 2) {
        r[k] = -r[k];
    }
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::compose(const PolynomialQ& inner) const
{
    PolynomialQ acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

PolynomialQ PolynomialQ::shifted(const Rational& a) const
{
    // Repeated synthetic division (Taylor shift).
    std::vector<Rational> c = c_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) {
            c[k - 1] += a * c[k];
        }
    }
    return PolynomialQ(std::move(c));
}

std::vector<Integer> PolynomialQ::primitive_integer_coeffs() const
{
    if (is_zero()) {
        return {};
    }
    const Integer l = common_denominator(c_);
    std::vector<Integer> ints;
    ints.reserve(c_.size());
    Integer g = 0;
    for (const Rational& c : c_) {
        ints.push_back(c.num() * (l / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (ints.back() < 0) {
        g = -g;
    }
    for (Integer& v : ints) {
        v /= g;
    }
    return ints;
}

std::pair<PolynomialQ, PolynomialQ> PolynomialQ::divmod(const PolynomialQ& divisor) const
{
    if (divisor.is_zero()) {
        throw InvalidArgument("polynomial division by zero");
    }
    if (degree() < divisor.degree()) {
        return {PolynomialQ(), *this};
    }
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1);
    const Rational lead_inv = divisor.leading().inverse();
    const std::size_t dd = divisor.c_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + dd] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] -= q * divisor.c_[j];
        }
    }
    rem.resize(dd);
    return {PolynomialQ(std::move(quot)), PolynomialQ(std::move(rem))};
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator*=(const PolynomialQ& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> p(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            p[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(p);
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator*=(const Rational& s)
{
    for (auto& c : c_) {
        c *= s;
    }
    trim();
    return *this;
}

std::string PolynomialQ::str(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            os << mag;
        }
        if (k > 0) {
            if (!unit) {
                os << '*';
            }
            os << var;
            if (k > 1) {
                os << '^' << k;
            }
        }
    }
    return os.str();
}

PolynomialQ gcd(const PolynomialQ& a, const PolynomialQ& b)
{
    PolynomialQ x = a;
    PolynomialQ y = b;
    while (!y.is_zero()) {
        PolynomialQ r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Rational resultant(const PolynomialQ& a, const PolynomialQ& b)
{
    if (a.is_zero() || b.is_zero()) {
        return Rational();
    }
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    if (m + n == 0) {
        return Rational(1);
    }
    MatrixQ s(m + n);
    // Rows 0..n-1 carry shifted copies of a, rows n..n+m-1 copies of b, highest degree first.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k <= m; ++k) {
            s(r, r + k) = a.coeff(m - k);
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k <= n; ++k) {
            s(n + r, r + k) = b.coeff(n - k);
        }
    }
    return det_exact(s);
}

Rational discriminant(const PolynomialQ& p)
{
    if (p.degree() < 1) {
        throw InvalidArgument("discriminant needs degree >= 1");
    }
    const long n = p.degree();
    const Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * resultant(p, p.derivative()) / p.leading();
}

std::vector<Integer> positive_divisors(const Integer& value)
{
    Integer v = value;
    if (v < 0) {
        v = -v;
    }
    if (v == 0) {
        throw InvalidArgument("divisors of zero");
    }
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) {
                large.push_back(v / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Rational> rational_root_candidates(const PolynomialQ& p)
{
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Integer> ints = p.primitive_integer_coeffs();
    std::vector<Rational> out;
    std::size_t low = 0;
    while (ints[low] == 0) {
        ++low;
    }
    if (low > 0) {
        out.emplace_back(0);
    }
    if (static_cast<int>(low) == p.degree()) {
        return out;
    }
    for (const Integer& u : positive_divisors(ints[low])) {
        for (const Integer& v : positive_divisors(ints.back())) {
            out.emplace_back(u, v);
            out.emplace_back(Integer(-u), v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> rational_roots(const PolynomialQ& p)
{
    std::vector<Rational> roots;
    for (const Rational& c : rational_root_candidates(p)) {
        if (p(c).is_zero()) {
            roots.push_back(c);
        }
    }
    return roots;
}

} // namespace shuhan
