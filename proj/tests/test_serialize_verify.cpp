#include <doctest.h>

#include "shuhan/errors.hpp"
#include "shuhan/serialize.hpp"
#include "shuhan/verify.hpp"

using namespace shuhan;

TEST_CASE("matrix JSON round-trip")
{
    const MatrixQ m{{Rational(7, 4), -2}, {-1, Rational(7, 4)}};
    const Json j = matrix_to_json(m, Rational(7, 4));
    CHECK(j.dump() == R"({"order":2,"h":"7/4","entries":[["7/4","-2"],["-1","7/4"]]})");
    const auto [back, h] = matrix_from_json(j);
    CHECK(back == m);
    REQUIRE(h);
    CHECK(*h == Rational(7, 4));
}

TEST_CASE("matrix JSON schema errors")
{
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"entries":[["1","2"]]})")), InvalidArgument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"order":3,"entries":[["1"]]})")), InvalidArgument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"entries":[[1.5]]})")), InvalidArgument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"entries":[]})")), InvalidArgument);
    CHECK(matrix_from_json(Json::parse(R"({"entries":[[3]]})")).first == MatrixQ{{3}});
}

TEST_CASE("report JSON uses 1-based subsets")
{
    const ClassificationReport r = classify(MatrixQ{{-1}});
    const Json j = to_json(r, std::nullopt);
    CHECK(j["verdicts"][2]["notion"] == "virtual_psd");
    CHECK(j["verdicts"][2]["witness"]["subset"] == Json::array({1}));
}

TEST_CASE("polynomial JSON round-trip")
{
    const PolynomialQ p{Rational(9, 4), Rational(-13, 4), -1, 1};
    CHECK(polynomial_from_json(to_json(p)) == p);
}

TEST_CASE("digit refinement")
{
    const RootBracket b = refine_to_digits(isolate_largest_root(PolynomialQ{-2, 0, 1}), 12);
    CHECK(b.lo.decimal(12) == "1.414213562373");
    CHECK(digits_agree(b, 12));
}

TEST_CASE("suite names and aliases")
{
    CHECK(canonical_suite("lemma_1_3") == std::optional<std::string>("antisymmetric_perturbation"));
    CHECK(canonical_suite("thm_4_4") == std::optional<std::string>("finite_thresholds"));
    CHECK_FALSE(canonical_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
}

TEST_CASE("fast suites pass")
{
    for (const char* name : {"counterexample", "sum_closure", "determinants", "quartic", "strict_variants"}) {
        const SuiteResult r = run_suite(name);
        CHECK_MESSAGE(r.passed(), name);
    }
}

TEST_CASE("flip detects exact thresholds")
{
    const CartanLabel b2{Family::B, 2, Twist::Finite};
    const FlipResult f = check_flip(b2, Notion::GeneralizedPSD, threshold(b2, Notion::GeneralizedPSD).bracket);
    CHECK(f.ok());
    REQUIRE(f.at);
    CHECK(*f.at);
    CHECK(expected_generalized_psd_at_2({Family::C, 9, Twist::Finite}));
    CHECK_FALSE(expected_generalized_pd_at_2({Family::C, 9, Twist::Finite}));
}
