#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "shuhan/cartan.hpp"
#include "shuhan/closed_form.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/polynomial.hpp"
#include "shuhan/rational.hpp"

namespace shuhan {

enum class Seq { A, B, D, E, F4, G2, HatB, HatBAff1, HatCAff1 };

/// A named determinant sequence and its index.
///
/// Index ranges: a n >= 0, b n >= 2, d n >= 4, e n in {6, 7, 8}, hat_b n >= 1,
/// hat_b_aff1 n >= 3, hat_c_aff1 n >= 2. f4 and g2 take index 4 and 2.
struct SequenceId {
    Seq name = Seq::A;
    int index = 0;

    bool is_valid() const;
    void validate() const;
    /// "a", "hat_b_aff1", ...
    std::string name_str() const;
    /// "a_5", "e_8", "hat_c_aff1_3".
    std::string str() const;

    friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

Seq parse_seq(std::string_view text);

/// Exact value by recurrence. Throws InvalidArgument for an out-of-range index.
Rational seq_eval(const SequenceId& id, const Rational& h);

/// The same recurrence unrolled over polynomials in h.
PolynomialQ seq_poly(const SequenceId& id);

/// e_j through the alternate route h d_(j-1) - a_(j-2); j in {6, 7, 8}.
Rational e_via_d(int j, const Rational& h);
PolynomialQ e_via_d_poly(int j);

/// The label and variant whose determinant the sequence equals
/// (a_n: A_n, b_n: B_n, hat_b_n: symmetrized B_n, ...), or nullopt for a_0 and
/// hat_b_1, which have no matrix of their own.
std::optional<std::pair<CartanLabel, Variant>> oracle_label(const SequenceId& id);

/// sqrt(h^2-4)^-1 [((h + sqrt(h^2-4))/2)^(n+1) - ((h - sqrt(h^2-4))/2)^(n+1)],
/// with complex intermediates when h < 2. Throws InvalidArgument at h == 2 or n < 0,
/// std::logic_error if the imaginary residue exceeds 1e-12 relative.
long double closed_a_radical(int n, long double h);

/// a_n = sin((n+1)t)/sin t, b_n = 2cos(nt), d_n = 4cos(t)cos((n-1)t) with
/// t = arccos(h/2). Needs 0 <= h < 2 and a valid a, b or d index.
long double closed_trig(Seq name, int n, long double h);

/// The sequence is >= 0 on [0, 2) exactly when h >= 2cos(pi/m), with m = n+1 for a,
/// 2n for b, 2(n-1) for d.
ClosedForm sign_threshold(Seq name, int n);

/// e_8 as 2[-2 sin(5t) sin(3t) + cos(6t) - 1/2] with t = arccos(h/2).
long double e8_trig(long double theta);

} // namespace shuhan
