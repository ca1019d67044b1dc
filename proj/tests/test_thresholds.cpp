#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/thresholds.hpp"

using namespace shuhan;

TEST_CASE("thresholds contain the oracle's largest sign change")
{
    for (const auto& label : all_labels(7, true, true)) {
        for (Notion n : {Notion::VirtualPSD, Notion::GeneralizedPSD}) {
            const ThresholdRecord t = threshold(label, n, Rational::pow2(-50));
            const Variant v = n == Notion::VirtualPSD ? Variant::Plain : Variant::Symmetrized;
            const Rational root = oracle::largest_sign_change(det_in_h(label, v), Rational(10), 70);
            CHECK_MESSAGE(std::abs((root - t.bracket.midpoint()).to_long_double()) < 1e-12L, label.str());
            CHECK(t.closed_form_consistent(1e-12L));
        }
    }
}

TEST_CASE("named examples")
{
    CHECK(threshold({Family::E, 7, Twist::Finite}, Notion::SymPSD).closed->str() == "2*cos(pi/18)");
    CHECK(threshold({Family::A, 2, Twist::Aff2}, Notion::GeneralizedPSD).bracket.lo == Rational(5, 2));
    CHECK(threshold({Family::F, 4, Twist::Aff1}, Notion::GeneralizedPD).closed->str() == "sqrt(17)/2");
    CHECK(threshold({Family::G, 2, Twist::Aff1}, Notion::GeneralizedPSD).closed->str() == "sqrt(5)");
    CHECK(threshold({Family::C, 5, Twist::Aff1}, Notion::GeneralizedPSD).closed->str().rfind("largest root of", 0) == 0);
    CHECK(mu(5).closed->str() == "sqrt(21/8 + sqrt(89)/8)");
    CHECK(mu(2).bracket.is_exact());
    CHECK(std::abs(epsilon().approx - 2.04998L) < 5e-6L);
    CHECK_THROWS_AS(threshold({Family::B, 3, Twist::Finite}, Notion::SymPSD), NoThreshold);
    CHECK_THROWS_AS(threshold({Family::C, 10, Twist::Finite}, Notion::GeneralizedPD), NoThreshold);
    CHECK_THROWS_AS(mu(1), InvalidArgument);
}

TEST_CASE("family classification matches checkers around thresholds")
{
    const CartanLabel b4{Family::B, 4, Twist::Finite};
    const FamilyReport above = classify_family(b4, Rational(2));
    CHECK(above.checks.verdict(Notion::GeneralizedPD));
    const FamilyReport below = classify_family(b4, Rational(19, 10));
    CHECK_FALSE(below.checks.verdict(Notion::GeneralizedPSD));
    const FamilyReport outside = classify_family({Family::B, 11, Twist::Finite}, Rational(21, 10));
    CHECK(outside.checks.verdict(Notion::GeneralizedPD));
    CHECK(outside.verdicts[static_cast<int>(Notion::GeneralizedPD)].basis == "outside theorem table");
}

TEST_CASE("mu_8 printed radicand misses the root")
{
    const RootBracket b = mu(8, Rational::pow2(-50)).bracket;
    CHECK(std::abs(mu8_expression(kMu8Radicand).eval() - b.approx()) < 1e-12L);
    CHECK(std::abs(mu8_expression(kMu8PrintedRadicand).eval() - b.approx()) > 1e-3L);
}
