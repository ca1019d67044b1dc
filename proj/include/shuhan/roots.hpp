#pragma once

#include <vector>

#include "shuhan/polynomial.hpp"
#include "shuhan/rational.hpp"

namespace shuhan {

/// Sturm sequence of a nonzero polynomial.
///
/// Sign variations are taken just to the right of each evaluation point, so
/// count(lo, hi) is the number of distinct real roots in (lo, hi] even when an
/// endpoint is itself a root.
class SturmChain {
public:
    explicit SturmChain(const PolynomialQ& p);

    int variations_right_of(const Rational& x) const;
    int count(const Rational& lo, const Rational& hi) const;
    const PolynomialQ& poly() const { return seq_.front(); }

private:
    std::vector<PolynomialQ> seq_;
};

/// Isolating interval for one real root of `poly`.
///
/// Either lo < hi and `poly` has exactly one distinct root in (lo, hi], or
/// lo == hi and that rational is an exact root.
struct RootBracket {
    Rational lo;
    Rational hi;
    PolynomialQ poly;

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    long double approx() const { return midpoint().to_long_double(); }
    /// True iff `x` lies in [lo, hi].
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    /// Compares the bracketed root r with a rational x, exactly:
    /// -1 if r < x, 0 if r == x, +1 if r > x.
    int compare(const Rational& x) const;
};

/// 2^-40, the default refinement width.
Rational default_width();

/// Number of distinct real roots in (lo, hi]. Throws for the zero polynomial or lo >= hi.
int sturm_count(const PolynomialQ& poly, const Rational& lo, const Rational& hi);

/// Every real root lies strictly inside (-bound, bound).
Rational cauchy_bound(const PolynomialQ& poly);

/// Number of distinct real roots strictly below x.
int count_roots_below(const PolynomialQ& poly, const Rational& x);

/// Bracket around the largest real root. Throws InvalidArgument when there is none.
RootBracket isolate_largest_root(const PolynomialQ& poly);
/// Bracket around the smallest real root. Throws InvalidArgument when there is none.
RootBracket isolate_smallest_root(const PolynomialQ& poly);

/// Sub-bracket of width <= `width` around the same root. Collapses to an exact
/// bracket when the root is rational and gets isolated by its simplest-rational test.
RootBracket refine(const RootBracket& bracket, const Rational& width);

} // namespace shuhan
