#pragma once

#include <functional>
#include <optional>

#include "shuhan/cartan.hpp"
#include "shuhan/matrix.hpp"
#include "shuhan/polynomial.hpp"

namespace shuhan {

/// Exact determinant by fraction-free (Bareiss) elimination on the matrix
/// scaled to integers. The order-0 determinant is 1.
Rational det_exact(const MatrixQ& m);

/// Determinant of the principal submatrix on `indices` (any order, duplicates ignored).
/// The empty index set gives 1.
Rational principal_minor(const MatrixQ& m, const IndexSet& indices);

/// Determinant after deleting the rows and columns in `removed`; deleting everything gives 1.
Rational complementary_principal_minor(const MatrixQ& m, const IndexSet& removed);

/// det(x E - m), monic of degree n, from exact values at x = 0..n.
PolynomialQ char_poly(const MatrixQ& m);

enum class Variant { Plain, Symmetrized };

/// det(S + (h - 2) E) as a polynomial in h (symmetrized S for Variant::Symmetrized),
/// interpolated from exact determinants at h = 0..order.
PolynomialQ det_in_h(const CartanLabel& label, Variant variant = Variant::Plain);

/// Visits nonempty index subsets of {0..n-1} by size, then lexicographically.
/// The visitor returns false to stop early.
void for_each_subset(std::size_t n, const std::function<bool(const IndexSet&)>& visit);

/// Sum over all k-subsets of principal minors, k = 0..n (k = 0 gives 1).
std::vector<Rational> principal_minor_sums(const MatrixQ& m);

/// Solution of m x = b, or nullopt if m is singular.
std::optional<Vector> solve(const MatrixQ& m, const Vector& b);

/// A basis of {x : m x = 0}, each vector with integer entries.
std::vector<Vector> nullspace(const MatrixQ& m);

} // namespace shuhan
