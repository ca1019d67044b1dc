#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/recurrences.hpp"
#include "shuhan/verify.hpp"

using namespace shuhan;

TEST_CASE("sequences equal Laplace determinants")
{
    Rng rng(31);
    const std::vector<SequenceId> ids = {{Seq::A, 5}, {Seq::B, 4}, {Seq::D, 5}, {Seq::E, 6}, {Seq::F4, 4},
                                         {Seq::G2, 2}, {Seq::HatB, 5}, {Seq::HatBAff1, 4}, {Seq::HatCAff1, 3}};
    for (const auto& id : ids) {
        const auto pair = oracle_label(id);
        REQUIRE(pair);
        for (int k = 0; k < 5; ++k) {
            const Rational h = random_rational(rng, 0, 4, 7);
            MatrixQ m = build(pair->first, h).matrix();
            if (pair->second == Variant::Symmetrized) {
                m = oracle::symmetric_part(m);
            }
            CHECK(seq_eval(id, h) == oracle::laplace_det(m));
        }
    }
}

TEST_CASE("initial values")
{
    CHECK(seq_poly({Seq::A, 0}) == PolynomialQ{1});
    CHECK(seq_poly({Seq::A, 1}) == PolynomialQ{0, 1});
    CHECK(seq_poly({Seq::HatB, 2}) == PolynomialQ{Rational(-9, 4), 0, 1});
    CHECK(seq_eval({Seq::A, 4}, 2) == Rational(5));
    CHECK(seq_eval({Seq::HatB, 5}, 2) == Rational(1));
    CHECK(e_via_d_poly(7) == seq_poly({Seq::E, 7}));
}

TEST_CASE("names and validation")
{
    CHECK(SequenceId{Seq::HatBAff1, 4}.str() == "hat_b_aff1_4");
    CHECK(parse_seq("hat_b") == Seq::HatB);
    CHECK_THROWS_AS(SequenceId({Seq::E, 9}).validate(), InvalidArgument);
    CHECK_THROWS_AS(SequenceId({Seq::D, 3}).validate(), InvalidArgument);
}

TEST_CASE("closed forms")
{
    CHECK(std::abs(closed_a_radical(6, 3.0L) - seq_eval({Seq::A, 6}, 3).to_long_double()) < 1e-9L);
    CHECK(std::abs(closed_trig(Seq::A, 6, 1.0L) - seq_eval({Seq::A, 6}, 1).to_long_double()) < 1e-12L);
    CHECK(sign_threshold(Seq::A, 4).str() == "2*cos(pi/5)");
}
