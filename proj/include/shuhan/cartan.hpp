#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shuhan/matrix.hpp"
#include "shuhan/rational.hpp"

namespace shuhan {

enum class Family { A, B, C, D, E, F, G };
enum class Twist { Finite, Aff1, Aff2, Aff3 };

/// Finite or affine Cartan type in Kac's naming.
///
/// `rank` is the subscript of the Kac name: for untwisted types it is the
/// rank of the underlying finite type; for twisted types it is the subscript
/// as written (A4(2), A5(2), D3(2), E6(2), D4(3)), so the matrix order is not
/// rank + 1 there. Use `order()` for the matrix size.
struct CartanLabel {
    Family family = Family::A;
    int rank = 1;
    Twist twist = Twist::Finite;

    bool is_valid() const;
    /// Throws InvalidArgument naming the bad combination.
    void validate() const;
    std::size_t order() const;
    bool is_affine() const { return twist != Twist::Finite; }
    /// True when the generator matrix is symmetric (simply laced).
    bool is_symmetric() const;

    /// "B5", "C3(1)", "A4(2)", "D4(3)".
    std::string str() const;
    static CartanLabel parse(std::string_view text);

    friend bool operator==(const CartanLabel&, const CartanLabel&) = default;
};

char family_char(Family f);
Family parse_family(std::string_view text);
std::string twist_name(Twist t);
Twist parse_twist(std::string_view text);

/// Every valid label with subscript in [1, max_rank], finite first, in a fixed order.
std::vector<CartanLabel> all_labels(int max_rank, bool finite, bool affine);

/// h-Shuhan matrix: diagonal h >= 0, nonpositive integer off-diagonal entries,
/// and for i != j either h_ij == h_ji or h_ij < h_ji == -1.
class ShuhanMatrix {
public:
    /// Throws InvalidArgument if `m` violates any of the three conditions for `h`.
    ShuhanMatrix(MatrixQ m, Rational h);

    const MatrixQ& matrix() const { return base_; }
    const Rational& h() const { return h_; }
    std::size_t order() const { return base_.order(); }

private:
    MatrixQ base_;
    Rational h_;
};

/// Reason the matrix fails the Shuhan conditions, or nullopt if it satisfies them.
std::optional<std::string> shuhan_violation(const MatrixQ& m, const Rational& h);
bool validate_shuhan(const MatrixQ& m, const Rational& h);

/// Integer generalized Cartan matrix of the label (diagonal 2).
MatrixQ generator(const CartanLabel& label);

/// generator(label) + (h - 2) E.
ShuhanMatrix build(const CartanLabel& label, const Rational& h);

/// Connectivity of the graph with an edge i--j whenever m(i, j) != 0.
bool is_indecomposable(const MatrixQ& m);
inline bool is_indecomposable(const ShuhanMatrix& m) { return is_indecomposable(m.matrix()); }

} // namespace shuhan
