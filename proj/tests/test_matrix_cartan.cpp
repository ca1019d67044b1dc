#include <doctest.h>

#include "shuhan/cartan.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/matrix.hpp"

using namespace shuhan;

TEST_CASE("generator tables")
{
    CHECK(generator({Family::B, 2, Twist::Finite}) == MatrixQ{{2, -2}, {-1, 2}});
    CHECK(generator({Family::G, 2, Twist::Finite}) == MatrixQ{{2, -3}, {-1, 2}});
    CHECK(generator({Family::A, 1, Twist::Aff1}) == MatrixQ{{2, -2}, {-2, 2}});
    CHECK(generator({Family::A, 2, Twist::Aff2}).order() == 2);
    CHECK(generator({Family::G, 2, Twist::Aff1}).order() == 3);
    CHECK(generator({Family::D, 4, Twist::Aff3}).order() == 3);
    CHECK(generator({Family::E, 6, Twist::Aff2}).order() == 5);
    CHECK(generator({Family::A, 5, Twist::Aff2}).order() == 4);
    for (const auto& label : all_labels(10, true, true)) {
        const MatrixQ g = generator(label);
        CHECK(g.order() == label.order());
        CHECK(validate_shuhan(g, 2));
        CHECK(is_indecomposable(g));
        CHECK(g.is_symmetric() == label.is_symmetric());
    }
}

TEST_CASE("build shifts the diagonal")
{
    const ShuhanMatrix m = build({Family::B, 2, Twist::Finite}, Rational(7, 4));
    CHECK(m.matrix() == MatrixQ{{Rational(7, 4), -2}, {-1, Rational(7, 4)}});
    CHECK(m.h() == Rational(7, 4));
    CHECK(build({Family::A, 1, Twist::Finite}, 0).matrix() == MatrixQ{{0}});
    CHECK_THROWS_AS(build({Family::A, 2, Twist::Finite}, -1), InvalidArgument);
}

TEST_CASE("Shuhan conditions")
{
    CHECK(validate_shuhan(MatrixQ{{1, -3}, {-1, 1}}, 1));
    CHECK(shuhan_violation(MatrixQ{{1, -3}, {-2, 1}}, 1).has_value());
    CHECK(shuhan_violation(MatrixQ{{1, 1}, {1, 1}}, 1).has_value());
    CHECK(shuhan_violation(MatrixQ{{2, Rational(-7, 2)}, {-1, 2}}, 2).has_value());
    CHECK(shuhan_violation(MatrixQ{{2, 0}, {0, 3}}, 2).has_value());
    CHECK_THROWS_AS(ShuhanMatrix(MatrixQ{{1, -3}, {-2, 1}}, 1), InvalidArgument);
}

TEST_CASE("labels parse, print and validate")
{
    CHECK(CartanLabel::parse("C3(1)") == CartanLabel{Family::C, 3, Twist::Aff1});
    CHECK(CartanLabel::parse("D4(3)").str() == "D4(3)");
    CHECK(CartanLabel{Family::E, 6, Twist::Aff2}.str() == "E6(2)");
    CHECK_FALSE(CartanLabel{Family::B, 1, Twist::Finite}.is_valid());
    CHECK_FALSE(CartanLabel{Family::E, 9, Twist::Finite}.is_valid());
    CHECK_FALSE(CartanLabel{Family::G, 3, Twist::Finite}.is_valid());
    CHECK_FALSE(CartanLabel{Family::A, 3, Twist::Aff3}.is_valid());
    CHECK_THROWS_AS(CartanLabel::parse("Q2"), InvalidArgument);
}

TEST_CASE("permutation and symmetrization")
{
    const MatrixQ m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const Permutation s({2, 0, 1});
    CHECK(permute(permute(m, s), s.inverse()) == m);
    CHECK(symmetrize(m) == MatrixQ{{1, 3, 5}, {3, 5, 7}, {5, 7, 9}});
    CHECK(principal_submatrix(m, {0, 2}) == MatrixQ{{1, 3}, {7, 9}});
    CHECK(quadratic_form(MatrixQ{{2, Rational(-7, 2)}, {-1, 2}}, Vector{1, 1}) == Rational(-1, 2));
    CHECK_THROWS_AS(principal_submatrix(m, {0, 3}), InvalidArgument);
}
