#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shuhan/cartan.hpp"
#include "shuhan/closed_form.hpp"
#include "shuhan/definiteness.hpp"
#include "shuhan/roots.hpp"

namespace shuhan {

/// A critical h: the notion holds on the family exactly for h >= the bracketed
/// root (h > root for the strict notions).
struct ThresholdRecord {
    /// "threshold", "mu_5", "epsilon", "lambda_4", "eta_3".
    std::string name = "threshold";
    /// Absent for epsilon, which belongs to no single label.
    std::optional<CartanLabel> label;
    Notion notion = Notion::GeneralizedPSD;
    std::optional<ClosedForm> closed;
    RootBracket bracket;
    long double approx = 0;

    /// The closed form evaluates inside [lo - slack, hi + slack].
    bool closed_form_consistent(long double slack = 1e-15L) const;
};

/// Threshold of a covered (label, notion) pair, refined to `width`.
///
/// The bracket polynomial is det_in_h(label) for the symmetric and virtual
/// notions and det_in_h(label, Symmetrized) for the generalized ones; strict
/// notions share the threshold of their semi-definite partner. Throws
/// NoThreshold for uncovered pairs: symmetric notions on non-symmetric labels,
/// and generalized notions on B_n / C_n with n >= 10.
ThresholdRecord threshold(const CartanLabel& label, Notion notion, const Rational& width = default_width());

/// Largest root of hat_b_n, n >= 2. Closed forms for n <= 9.
ThresholdRecord mu(int n, const Rational& width = default_width());

/// Largest root of g(h) = h^3 - h^2 - 13/4 h + 9/4 with its trigonometric form.
ThresholdRecord epsilon(const Rational& width = default_width());

enum class AffineKind { Lambda, Eta };

/// Largest root of hat_b_aff1_n (lambda, n >= 3) or hat_c_aff1_n (eta, n >= 2).
ThresholdRecord lambda_eta(AffineKind kind, int n, const Rational& width = default_width());

/// g(h) = hat_b_3 - hat_b_2.
PolynomialQ epsilon_polynomial();

/// Closed form of mu_n for 2 <= n <= 9; nullopt past 9.
std::optional<ClosedForm> mu_closed_form(int n);

/// The n = 8 radical form with alpha = sqrt(727) cos(arctan(3 sqrt(radicand) / 34607) / 3).
/// The largest root of hat_b_8 needs radicand 37701987.
Expr mu8_expression(long radicand);
inline constexpr long kMu8Radicand = 37701987;
/// A misprinted radicand in circulation; its form misses mu_8.
inline constexpr long kMu8PrintedRadicand = 3779987;

ClosedForm epsilon_closed_form();

/// Per-notion prediction from the threshold table next to the checker verdict.
struct FamilyVerdict {
    Notion notion = Notion::SymPSD;
    bool checker = false;
    std::optional<bool> predicted;
    /// "theorem", "outside theorem table", or "not applicable".
    std::string basis;
};

struct FamilyReport {
    CartanLabel label;
    Rational h;
    ClassificationReport checks;
    std::vector<FamilyVerdict> verdicts; // kAllNotions order
};

/// Runs every checker on build(label, h) and compares each verdict with the
/// threshold table. A disagreement throws std::logic_error.
FamilyReport classify_family(const CartanLabel& label, const Rational& h, const CheckLimits& limits = {});

/// Numeric checks on f_x = x^4 - 33/4 x^3 + 85/4 x^2 - 35/2 x + 9/4, which is
/// hat_b_8 in the variable x = h^2.
struct QuarticChecks {
    PolynomialQ f;
    Rational discriminant;
    bool discriminant_is_square = false;
    /// y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) for f = x^4 + a x^3 + b x^2 + c x + d.
    PolynomialQ resolvent;
    /// The resolvent with the misprinted constant term -31861/64.
    PolynomialQ printed_resolvent;
    /// Candidates u/v, u in {1, 151, 211, 31861} (either sign), v in {1, 2, ..., 64}.
    std::vector<Rational> printed_candidates;
    std::vector<Rational> printed_candidate_roots;
    std::vector<Rational> printed_resolvent_roots; // over the full rational-root candidate set
    std::vector<Rational> resolvent_roots;         // over the full rational-root candidate set
    /// Bracket of mu_8^2 as a root of f.
    RootBracket mu8_squared;
    bool sign_change_at_mu8_squared = false;
};

QuarticChecks quartic_checks();

inline const Rational kPrintedDiscriminant(12567329, 4096);

} // namespace shuhan
