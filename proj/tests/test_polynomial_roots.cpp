#include <doctest.h>

#include "oracles.hpp"
#include "shuhan/polynomial.hpp"
#include "shuhan/roots.hpp"

using namespace shuhan;

TEST_CASE("polynomial arithmetic")
{
    const PolynomialQ p{-1, 0, 1}; // x^2 - 1
    CHECK(p(Rational(3)) == Rational(8));
    CHECK(p.derivative() == PolynomialQ{0, 2});
    const auto [q, r] = p.divmod(PolynomialQ{-1, 1});
    CHECK(q == PolynomialQ{1, 1});
    CHECK(r.is_zero());
    CHECK(p.shifted(Rational(1)) == PolynomialQ{0, 2, 1});
    CHECK(p.compose(PolynomialQ{0, 0, 1}) == PolynomialQ{-1, 0, 0, 0, 1});
    CHECK(p.str() == "x^2 - 1");
    CHECK(gcd(p, PolynomialQ{1, 1}) == PolynomialQ{1, 1});
}

TEST_CASE("interpolation reproduces the polynomial")
{
    const PolynomialQ p{Rational(3, 2), -2, 0, Rational(1, 3)};
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    for (long k = 0; k <= 3; ++k) {
        nodes.emplace_back(k);
        values.push_back(p(Rational(k)));
    }
    CHECK(PolynomialQ::interpolate(nodes, values) == p);
}

TEST_CASE("discriminant and rational roots")
{
    CHECK(discriminant(PolynomialQ{-2, 0, 1}) == Rational(8));
    CHECK(rational_roots(PolynomialQ{-3, 2}) == std::vector<Rational>{Rational(3, 2)});
    CHECK(rational_roots(PolynomialQ{-2, 0, 1}).empty());
}

TEST_CASE("Sturm counts distinct roots in (lo, hi]")
{
    const PolynomialQ p = PolynomialQ{-1, 1} * PolynomialQ{-2, 1} * PolynomialQ{-2, 1}; // (x-1)(x-2)^2
    CHECK(sturm_count(p, Rational(0), Rational(3)) == 2);
    CHECK(sturm_count(p, Rational(1), Rational(3)) == 1);
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 1);
    CHECK(count_roots_below(p, Rational(2)) == 1);
}

TEST_CASE("largest root isolation against sign-based bisection")
{
    const PolynomialQ p{-2, 0, 1};
    const RootBracket b = refine(isolate_largest_root(p), Rational::pow2(-50));
    CHECK(b.width() <= Rational::pow2(-50));
    CHECK(b.contains(oracle::largest_sign_change(p, Rational(4), 60)) );
    CHECK(b.compare(Rational(3, 2)) < 0);
    CHECK(b.compare(Rational(7, 5)) > 0);
    const RootBracket exact = refine(isolate_largest_root(PolynomialQ{-3, 2}), Rational::pow2(-40));
    CHECK(exact.is_exact());
    CHECK(exact.lo == Rational(3, 2));
    CHECK(exact.compare(Rational(3, 2)) == 0);
    const RootBracket small = isolate_smallest_root(PolynomialQ{-2, 0, 1});
    CHECK(small.hi <= Rational(0));
}
