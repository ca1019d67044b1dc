#include "shuhan/thresholds.hpp"

#include <algorithm>
#include <stdexcept>

#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/recurrences.hpp"

namespace shuhan {

bool ThresholdRecord::closed_form_consistent(long double slack) const
{
    if (!closed) {
        return true;
    }
    const long double v = closed->eval();
    return bracket.lo.to_long_double() - slack <= v && v <= bracket.hi.to_long_double() + slack;
}

namespace {

Expr q(long num, long den = 1)
{
    return Expr(Rational(num, den));
}

Expr sqrt_int(long v)
{
    return sqrt(Expr(v));
}

RootBracket largest(const PolynomialQ& p, const Rational& width)
{
    return refine(isolate_largest_root(p), width);
}

ThresholdRecord make_record(std::string name, std::optional<CartanLabel> label, Notion notion,
                            std::optional<ClosedForm> closed, const PolynomialQ& poly, const Rational& width)
{
    ThresholdRecord r;
    r.name = std::move(name);
    r.label = label;
    r.notion = notion;
    r.closed = std::move(closed);
    r.bracket = largest(poly, width);
    r.approx = r.bracket.approx();
    return r;
}

std::optional<ClosedForm> lambda_eta_closed(AffineKind kind, int n)
{
    if (kind == AffineKind::Lambda) {
        if (n == 3) {
            return ClosedForm::sqrt_of(Rational(17, 4));
        }
        if (n == 4) {
            return ClosedForm::nested_radical(sqrt(q(21, 8) + q(3, 8) * sqrt_int(17)));
        }
        return std::nullopt;
    }
    if (n == 2) {
        return ClosedForm::sqrt_of(Rational(9, 2));
    }
    if (n == 3) {
        return ClosedForm::nested_radical(sqrt(q(11, 4) + sqrt_int(10) / Expr(2)));
    }
    return std::nullopt;
}

ClosedForm or_root(std::optional<ClosedForm> closed, const PolynomialQ& poly)
{
    return closed ? *closed : ClosedForm::largest_root_of(poly);
}

// Closed form of the semi-definite threshold, per the theorem table.
ClosedForm table_closed_form(const CartanLabel& label, Notion notion, const PolynomialQ& poly)
{
    const int n = label.rank;
    const bool generalized = notion == Notion::GeneralizedPSD;
    if (!label.is_affine()) {
        switch (label.family) {
        case Family::A: return ClosedForm::two_cos_pi_over(n + 1);
        case Family::B:
        case Family::C:
            if (generalized) {
                return *mu_closed_form(n);
            }
            return ClosedForm::two_cos_pi_over(2L * n);
        case Family::D: return ClosedForm::two_cos_pi_over(2L * (n - 1));
        case Family::E: return ClosedForm::two_cos_pi_over(n == 6 ? 12 : n == 7 ? 18 : 30);
        case Family::F: return generalized ? ClosedForm::rational(2) : ClosedForm::two_cos_pi_over(12);
        case Family::G: return generalized ? ClosedForm::rational(2) : ClosedForm::two_cos_pi_over(6);
        }
    }
    if (!generalized || label.is_symmetric()) {
        return ClosedForm::rational(2);
    }
    switch (label.twist) {
    case Twist::Aff1:
        switch (label.family) {
        case Family::B: return or_root(lambda_eta_closed(AffineKind::Lambda, n), poly);
        case Family::C: return or_root(lambda_eta_closed(AffineKind::Eta, n), poly);
        case Family::F: return ClosedForm::sqrt_of(Rational(17, 4));
        case Family::G: return ClosedForm::sqrt_of(Rational(5));
        default: break;
        }
        break;
    case Twist::Aff2:
        switch (label.family) {
        case Family::A:
            if (n == 2) {
                return ClosedForm::rational(Rational(5, 2));
            }
            if (n % 2 == 0) {
                return or_root(lambda_eta_closed(AffineKind::Eta, n / 2), poly);
            }
            return or_root(lambda_eta_closed(AffineKind::Lambda, (n + 1) / 2), poly);
        case Family::D: return or_root(lambda_eta_closed(AffineKind::Eta, n - 1), poly);
        case Family::E: return ClosedForm::sqrt_of(Rational(17, 4));
        default: break;
        }
        break;
    case Twist::Aff3: return ClosedForm::sqrt_of(Rational(5));
    default: break;
    }
    return ClosedForm::largest_root_of(poly);
}

} // namespace

PolynomialQ epsilon_polynomial()
{
    return seq_poly({Seq::HatB, 3}) - seq_poly({Seq::HatB, 2});
}

Expr mu8_expression(long radicand)
{
    const Expr alpha = (sqrt_int(727) * cos(arctan(Expr(3) * sqrt_int(radicand) / Expr(34607)) / Expr(3))).named("alpha");
    const Expr beta = sqrt(q(547, 3) + q(32, 3) * alpha).named("beta");
    return sqrt(q(33, 16) + beta / Expr(16) +
                q(1, 2) * sqrt(q(547, 96) - alpha / Expr(6) + Expr(17) / (Expr(32) * beta)));
}

std::optional<ClosedForm> mu_closed_form(int n)
{
    switch (n) {
    case 2: return ClosedForm::rational(Rational(3, 2));
    case 3: return ClosedForm::sqrt_of(Rational(13, 4));
    case 4: return ClosedForm::nested_radical(sqrt(q(17, 8) + sqrt_int(145) / Expr(8)));
    case 5: return ClosedForm::nested_radical(sqrt(q(21, 8) + sqrt_int(89) / Expr(8)));
    case 6: {
        const Expr t1 = (arctan(Expr(54) * sqrt_int(1327) / Expr(19)) / Expr(3)).named("theta1");
        return ClosedForm::trig_expression(sqrt(q(25, 12) + sqrt_int(157) / Expr(6) * cos(t1)));
    }
    case 7: {
        const Expr t2 = (arctan(Expr(12) * sqrt_int(11919) / Expr(235)) / Expr(3)).named("theta2");
        return ClosedForm::trig_expression(
            sqrt(q(29, 12) + q(11, 12) * cos(t2) + Expr(11) * sqrt_int(3) / Expr(12) * sin(t2)));
    }
    case 8: return ClosedForm::nested_radical(mu8_expression(kMu8Radicand));
    case 9: return ClosedForm::rational(2);
    default: return std::nullopt;
    }
}

ClosedForm epsilon_closed_form()
{
    const Expr t4 = (arctan(Expr(3) * sqrt_int(7287) / Expr(118)) / Expr(3)).named("theta4");
    return ClosedForm::trig_expression(q(1, 3) + sqrt_int(129) / Expr(6) * sin(t4) +
                                       sqrt_int(43) / Expr(6) * cos(t4));
}

ThresholdRecord mu(int n, const Rational& width)
{
    if (n < 2) {
        throw InvalidArgument("mu_n needs n >= 2");
    }
    const PolynomialQ p = seq_poly({Seq::HatB, n});
    auto closed = mu_closed_form(n);
    return make_record("mu_" + std::to_string(n), CartanLabel{Family::B, n, Twist::Finite},
                       Notion::GeneralizedPSD, closed ? closed : ClosedForm::largest_root_of(p), p, width);
}

ThresholdRecord epsilon(const Rational& width)
{
    return make_record("epsilon", std::nullopt, Notion::GeneralizedPD, epsilon_closed_form(),
                       epsilon_polynomial(), width);
}

ThresholdRecord lambda_eta(AffineKind kind, int n, const Rational& width)
{
    const bool is_lambda = kind == AffineKind::Lambda;
    if (n < (is_lambda ? 3 : 2)) {
        throw InvalidArgument(is_lambda ? "lambda_n needs n >= 3" : "eta_n needs n >= 2");
    }
    const PolynomialQ p = seq_poly({is_lambda ? Seq::HatBAff1 : Seq::HatCAff1, n});
    return make_record((is_lambda ? "lambda_" : "eta_") + std::to_string(n),
                       CartanLabel{is_lambda ? Family::B : Family::C, n, Twist::Aff1}, Notion::GeneralizedPSD,
                       or_root(lambda_eta_closed(kind, n), p), p, width);
}

ThresholdRecord threshold(const CartanLabel& label, Notion notion, const Rational& width)
{
    label.validate();
    const Notion base = semidefinite_of(notion);
    if (base == Notion::SymPSD && !label.is_symmetric()) {
        throw NoThreshold("no threshold known: " + notion_name(notion) + " needs a symmetric family, " +
                          label.str() + " is not");
    }
    if (base == Notion::GeneralizedPSD && !label.is_affine() &&
        (label.family == Family::B || label.family == Family::C) && label.rank >= 10) {
        throw NoThreshold("no threshold known: " + notion_name(notion) + " for " + label.str() +
                          " lies outside the theorem table (rank >= 10)");
    }
    const PolynomialQ p =
        det_in_h(label, base == Notion::GeneralizedPSD ? Variant::Symmetrized : Variant::Plain);
    return make_record("threshold", label, notion, table_closed_form(label, base, p), p, width);
}

FamilyReport classify_family(const CartanLabel& label, const Rational& h, const CheckLimits& limits)
{
    FamilyReport report;
    report.label = label;
    report.h = h;
    const ShuhanMatrix m = build(label, h);
    report.checks = classify(m.matrix(), limits);
    for (Notion notion : kAllNotions) {
        FamilyVerdict v;
        v.notion = notion;
        const NotionReport& check = report.checks.at(notion);
        v.checker = check.verdict;
        if (!check.applicable) {
            v.basis = "not applicable";
            report.verdicts.push_back(v);
            continue;
        }
        try {
            const ThresholdRecord t = threshold(label, semidefinite_of(notion));
            const int c = t.bracket.compare(h); // sign of (root - h)
            v.predicted = is_strict(notion) ? c < 0 : c <= 0;
            v.basis = "theorem";
        } catch (const NoThreshold&) {
            v.basis = "outside theorem table";
            // h >= epsilon makes every B_n generalized positive-definite.
            if (epsilon().bracket.compare(h) <= 0) {
                v.predicted = true;
            }
        }
        if (v.predicted && *v.predicted != v.checker) {
            throw std::logic_error("checker disagrees with the threshold table for " + label.str() + " at h = " +
                                   h.str() + ", notion " + notion_name(notion));
        }
        report.verdicts.push_back(v);
    }
    return report;
}

QuarticChecks quartic_checks()
{
    QuarticChecks out;
    out.f = PolynomialQ{Rational(9, 4), Rational(-35, 2), Rational(85, 4), Rational(-33, 4), Rational(1)};
    out.discriminant = discriminant(out.f);
    {
        const Rational d = out.discriminant;
        out.discriminant_is_square = d.sign() >= 0 && mpz_perfect_square_p(d.num().get_mpz_t()) != 0 &&
                                     mpz_perfect_square_p(d.den().get_mpz_t()) != 0;
    }
    const Rational a = out.f.coeff(3);
    const Rational b = out.f.coeff(2);
    const Rational c = out.f.coeff(1);
    const Rational d = out.f.coeff(0);
    out.resolvent = PolynomialQ{-(a * a * d - Rational(4) * b * d + c * c), a * c - Rational(4) * d, -b, Rational(1)};
    out.printed_resolvent = PolynomialQ{Rational(-31861, 64), Rational(1083, 8), Rational(-85, 4), Rational(1)};
    for (long u : {1L, 151L, 211L, 31861L}) {
        for (long v : {1L, 2L, 4L, 8L, 16L, 32L, 64L}) {
            out.printed_candidates.push_back(Rational(u, v));
            out.printed_candidates.push_back(Rational(-u, v));
        }
    }
    for (const auto& x : out.printed_candidates) {
        if (out.printed_resolvent(x).is_zero()) {
            out.printed_candidate_roots.push_back(x);
        }
    }
    out.printed_resolvent_roots = rational_roots(out.printed_resolvent);
    out.resolvent_roots = rational_roots(out.resolvent);
    out.mu8_squared = largest(out.f, Rational::pow2(-60));
    const int lo_sign = out.f(out.mu8_squared.lo).sign();
    const int hi_sign = out.f(out.mu8_squared.hi).sign();
    out.sign_change_at_mu8_squared = out.mu8_squared.is_exact() ? hi_sign == 0 : lo_sign * hi_sign < 0;
    return out;
}

} // namespace shuhan
