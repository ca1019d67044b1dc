#include <doctest.h>

#include "oracles.hpp"
#include "shuhan/definiteness.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/verify.hpp"

using namespace shuhan;

TEST_CASE("virtual checker agrees with brute-force minors")
{
    Rng rng(21);
    for (int k = 0; k < 150; ++k) {
        const MatrixQ m = random_shuhan(rng, 1 + k % 6, random_rational(rng, 0, 4, 4));
        for (bool strict : {false, true}) {
            const NotionReport r = is_virtual_psd(m, strict);
            CHECK(r.verdict == oracle::all_principal_minors(m, strict));
            CHECK(witness_valid(m, r));
        }
    }
}

TEST_CASE("generalized checker agrees with the symmetric-part oracle")
{
    Rng rng(22);
    for (int k = 0; k < 150; ++k) {
        const MatrixQ m = random_shuhan(rng, 1 + k % 5, random_rational(rng, 0, 4, 4));
        for (bool strict : {false, true}) {
            const NotionReport r = is_generalized_psd(m, strict);
            CHECK(r.verdict == oracle::generalized_psd(m, strict));
            CHECK(witness_valid(m, r));
        }
    }
}

TEST_CASE("symmetric checker")
{
    CHECK(is_sym_psd(MatrixQ{{0}}).verdict);
    CHECK_FALSE(is_sym_psd(MatrixQ{{0}}, true).verdict);
    CHECK(is_sym_psd(MatrixQ{{2, -1}, {-1, 2}}, true).verdict);
    const NotionReport r = is_sym_psd(MatrixQ{{1, 2}, {2, 1}});
    CHECK_FALSE(r.verdict);
    CHECK(witness_valid(MatrixQ{{1, 2}, {2, 1}}, r));
    CHECK_THROWS_AS(is_sym_psd(MatrixQ{{1, 2}, {0, 1}}), InvalidArgument);
}

TEST_CASE("counterexample: virtual PD but not generalized PSD")
{
    const MatrixQ h{{2, Rational(-7, 2)}, {-1, 2}};
    const ClassificationReport r = classify(h);
    CHECK_FALSE(r.symmetric);
    CHECK_FALSE(r.at(Notion::SymPSD).applicable);
    CHECK(r.verdict(Notion::VirtualPD));
    CHECK_FALSE(r.verdict(Notion::GeneralizedPSD));
    const auto* x = std::get_if<Vector>(&r.at(Notion::GeneralizedPSD).witness);
    REQUIRE(x);
    CHECK(quadratic_form(h, *x).sign() < 0);
}

TEST_CASE("order cap")
{
    CheckLimits limits;
    limits.order_cap = 3;
    CHECK_THROWS_AS(is_virtual_psd(MatrixQ::identity(4), false, limits), ResourceLimit);
    CHECK(is_virtual_psd(MatrixQ::identity(3), false, limits).verdict);
}

TEST_CASE("notion names round-trip")
{
    for (Notion n : kAllNotions) {
        CHECK(parse_notion(notion_name(n)) == n);
        CHECK(semidefinite_of(strict_of(n)) == semidefinite_of(n));
    }
    CHECK_THROWS_AS(parse_notion("psd"), InvalidArgument);
}

TEST_CASE("GCM type")
{
    CHECK(gcm_classify(generator({Family::E, 8, Twist::Finite})) == GcmType::Finite);
    CHECK(gcm_classify(generator({Family::E, 8, Twist::Aff1})) == GcmType::Affine);
    CHECK(gcm_classify(MatrixQ{{2, -4}, {-1, 2}}) == GcmType::Affine);
    CHECK(gcm_classify(MatrixQ{{2, -5}, {-1, 2}}) == GcmType::Indefinite);
}
