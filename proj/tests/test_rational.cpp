#include <doctest.h>

#include "shuhan/errors.hpp"
#include "shuhan/rational.hpp"

using shuhan::Rational;

TEST_CASE("parse and print canonical p/q")
{
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("0/9").is_zero());
    CHECK_THROWS_AS(Rational::parse("1/0"), shuhan::InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1.5"), shuhan::InvalidArgument);
    CHECK_THROWS_AS(Rational::parse(""), shuhan::InvalidArgument);
}

TEST_CASE("arithmetic stays exact")
{
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK((Rational(9, 4) - Rational(1, 4)) / Rational(2) == Rational(1));
    CHECK(Rational(-3, 5).abs() == Rational(3, 5));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK_THROWS_AS(Rational(0).inverse(), shuhan::InvalidArgument);
}

TEST_CASE("truncated decimals")
{
    CHECK(Rational(1, 3).decimal(4) == "0.3333");
    CHECK(Rational(2).decimal(2) == "2.00");
    CHECK(Rational(-1, 8).decimal(2) == "-0.12");
}

TEST_CASE("simplest rational in an interval")
{
    CHECK(shuhan::simplest_between(Rational(14, 10), Rational(16, 10)) == Rational(3, 2));
    CHECK(shuhan::simplest_between(Rational(2), Rational(2)) == Rational(2));
    CHECK(shuhan::simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}
