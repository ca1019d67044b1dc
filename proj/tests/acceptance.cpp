// One PASS/FAIL line per acceptance criterion.
//
// Two criteria quote constants that are wrong as printed, so they
// fail at predictable points: the printed mu_8 radicand, and the affine
// constants sqrt(17)/2 and 3sqrt(2)/2 past their smallest rank. The exit
// status is 0 iff every failure is one of those predicted points.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/recurrences.hpp"
#include "shuhan/thresholds.hpp"
#include "shuhan/verify.hpp"

using namespace shuhan;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::set<std::string> failures;
    /// Failures that match a documented defect in a quoted constant.
    std::set<std::string> expected_failures;
};

std::string fixed(long double v, int digits = 12)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational oracle_det(const MatrixQ& m)
{
    const Rational c0 = oracle::faddeev_leverrier(m).coeff(0);
    return m.order() % 2 == 0 ? c0 : -c0;
}

// The mu table as printed, including the n = 8 radicand.
std::vector<Expr> printed_mu_forms()
{
    std::vector<Expr> f;
    f.push_back(Expr(Rational(3, 2)));
    f.push_back(sqrt(Expr(13)) / 2);
    f.push_back(sqrt(Expr(Rational(17, 8)) + sqrt(Expr(145)) / 8));
    f.push_back(sqrt(Expr(Rational(21, 8)) + sqrt(Expr(89)) / 8));
    f.push_back(*mu_closed_form(6)->expression());
    f.push_back(*mu_closed_form(7)->expression());
    f.push_back(mu8_expression(kMu8PrintedRadicand));
    return f;
}

Outcome criterion1()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Rational width(1, 1000000000000L);
    const auto forms = printed_mu_forms();
    for (int n = 2; n <= 8; ++n) {
        const RootBracket b = mu(n, width).bracket;
        const long double v = forms[n - 2].eval();
        const long double slack = 1e-15L;
        if (!(b.lo.to_long_double() - slack <= v && v <= b.hi.to_long_double() + slack)) {
            o.failures.insert("n=" + std::to_string(n));
            o.detail += " n=" + std::to_string(n) + " printed form " + fixed(v) + " outside [" +
                        fixed(b.lo.to_long_double()) + ", " + fixed(b.hi.to_long_double()) + "];";
        }
    }
    const RootBracket m2 = mu(2, width).bracket;
    const RootBracket m9 = mu(9, width).bracket;
    if (!(m2.is_exact() && m2.lo == Rational(3, 2))) {
        o.failures.insert("mu_2 exact");
    }
    if (!(m9.is_exact() && m9.lo == Rational(2))) {
        o.failures.insert("mu_9 exact");
    }
    const double s = seconds_since(t0);
    if (s >= 10) {
        o.failures.insert("runtime");
    }
    o.expected_failures = {"n=8"};
    o.detail += " mu_2 = 3/2 and mu_9 = 2 exact; " + fixed(s, 2) + " s";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const Rational width(1, 10000000000L);
    const ThresholdRecord e = epsilon(width);
    const PolynomialQ g{Rational(9, 4), Rational(-13, 4), -1, 1};
    const bool bracketed = e.bracket.width() <= width && g(e.bracket.lo).sign() <= 0 && g(e.bracket.hi).sign() >= 0;
    const bool near = std::abs(e.approx - 2.04998L) < 5e-6L;
    const bool trig = std::abs(e.closed->eval() - e.approx) < 1e-10L;
    if (!bracketed) {
        o.failures.insert("bracket");
    }
    if (!near) {
        o.failures.insert("2.04998");
    }
    if (!trig) {
        o.failures.insert("trig");
    }
    o.detail = " epsilon in [" + fixed(e.bracket.lo.to_long_double(), 13) + ", " +
               fixed(e.bracket.hi.to_long_double(), 13) + "], trig form " + fixed(e.closed->eval(), 13);
    return o;
}

Outcome criterion3()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t count = 0;
    for (const auto& label : all_labels(10, true, false)) {
        for (Notion n : {Notion::SymPSD, Notion::VirtualPSD, Notion::GeneralizedPSD}) {
            if (n == Notion::SymPSD && !label.is_symmetric()) {
                continue;
            }
            const bool bc = label.family == Family::B || label.family == Family::C;
            if (n == Notion::GeneralizedPSD && bc && label.rank >= 10) {
                continue; // outside the theorem table
            }
            ++count;
            const ThresholdRecord t = threshold(label, n);
            if (!check_flip(label, n, t.bracket).ok() || !t.closed_form_consistent(1e-12L)) {
                o.failures.insert(label.str() + "/" + notion_name(n));
            }
        }
    }
    const double s = seconds_since(t0);
    if (s >= 60) {
        o.failures.insert("runtime");
    }
    o.detail = " " + std::to_string(count) + " (label, notion) entries; " + fixed(s, 2) + " s";
    return o;
}

// Printed generalized threshold of an affine label; expect_defect marks ranks past
// the one where the printed constant is the true root.
struct AffineClaim {
    Expr constant;
    std::string constant_name;
    bool expect_defect = false;
};

std::optional<AffineClaim> printed_affine_constant(const CartanLabel& l)
{
    const Expr sqrt17_2 = sqrt(Expr(17)) / 2;
    const Expr three_sqrt2_2 = 3 * sqrt(Expr(2)) / 2;
    switch (l.twist) {
    case Twist::Aff1:
        switch (l.family) {
        case Family::G: return AffineClaim{sqrt(Expr(5)), "sqrt(5)"};
        case Family::F: return AffineClaim{sqrt17_2, "sqrt(17)/2"};
        case Family::B: return AffineClaim{sqrt17_2, "sqrt(17)/2", l.rank >= 4};
        case Family::C: return AffineClaim{three_sqrt2_2, "3sqrt(2)/2", l.rank >= 3};
        default: return std::nullopt;
        }
    case Twist::Aff2:
        switch (l.family) {
        case Family::E: return AffineClaim{sqrt17_2, "sqrt(17)/2"};
        case Family::A:
            if (l.rank == 2) {
                return AffineClaim{Expr(Rational(5, 2)), "5/2"};
            }
            if (l.rank % 2 == 1) {
                return AffineClaim{sqrt17_2, "sqrt(17)/2", (l.rank + 1) / 2 >= 4};
            }
            return AffineClaim{three_sqrt2_2, "3sqrt(2)/2", l.rank / 2 >= 3};
        case Family::D: return AffineClaim{three_sqrt2_2, "3sqrt(2)/2", l.rank - 1 >= 3};
        default: return std::nullopt;
        }
    case Twist::Aff3: return AffineClaim{sqrt(Expr(5)), "sqrt(5)"};
    default: return std::nullopt;
    }
}

Outcome criterion4()
{
    Outcome o;
    const Rational delta = Rational::pow2(-30);
    std::size_t flips = 0;
    for (const auto& label : all_labels(8, false, true)) {
        // Virtual threshold 2 for every affine label.
        if (!check_flip(label, Notion::VirtualPSD, RootBracket{Rational(2), Rational(2), {}}).ok()) {
            o.failures.insert(label.str() + "/virtual=2");
        }
        const auto claim = printed_affine_constant(label);
        if (!claim) {
            continue;
        }
        ++flips;
        const long double c = claim->constant.eval();
        const Rational c_lo = Rational::from_double(c) - delta;
        const Rational c_hi = Rational::from_double(c) + delta;
        const RootBracket around{c_lo, c_hi, {}};
        const FlipResult f = check_flip(label, Notion::GeneralizedPSD, around);
        if (!f.ok()) {
            o.failures.insert(label.str());
            o.detail += " " + label.str() + " threshold " +
                        fixed(threshold(label, Notion::GeneralizedPSD).approx, 10) + " != " + claim->constant_name + ";";
        }
        if (claim->expect_defect) {
            o.expected_failures.insert(label.str());
        }
    }
    o.detail += " " + std::to_string(flips) + " generalized flips, virtual = 2 on all labels";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    Rng rng(0xc5);
    std::size_t count = 0;
    for (Seq s : {Seq::A, Seq::B, Seq::D, Seq::E, Seq::F4, Seq::G2, Seq::HatB, Seq::HatBAff1, Seq::HatCAff1}) {
        for (int n = 0; n <= 12; ++n) {
            const SequenceId id{s, n};
            if (!id.is_valid()) {
                continue;
            }
            const auto pair = oracle_label(id);
            if (!pair) {
                continue;
            }
            ++count;
            const PolynomialQ p = seq_poly(id);
            for (int k = 0; k < 10; ++k) {
                const Rational h = random_rational(rng, 0, 4, 11);
                MatrixQ m = build(pair->first, h).matrix();
                if (pair->second == Variant::Symmetrized) {
                    m = oracle::symmetric_part(m);
                }
                const Rational d = oracle_det(m);
                if (seq_eval(id, h) != d || p(h) != d) {
                    o.failures.insert(id.str());
                }
            }
        }
    }
    o.detail = " " + std::to_string(count) + " sequences x 10 random h, exact";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        if (oracle_det(generator({Family::A, n, Twist::Finite})) != Rational(n + 1)) {
            o.failures.insert("A" + std::to_string(n));
        }
    }
    const std::vector<std::pair<CartanLabel, long>> spots = {
        {{Family::B, 2, Twist::Finite}, 2}, {{Family::D, 4, Twist::Finite}, 4}, {{Family::E, 6, Twist::Finite}, 3},
        {{Family::E, 7, Twist::Finite}, 2}, {{Family::E, 8, Twist::Finite}, 1}, {{Family::F, 4, Twist::Finite}, 1},
        {{Family::G, 2, Twist::Finite}, 1},
    };
    for (const auto& [label, v] : spots) {
        if (oracle_det(generator(label)) != Rational(v)) {
            o.failures.insert(label.str());
        }
    }
    std::size_t affine = 0;
    for (const auto& label : all_labels(10, false, true)) {
        ++affine;
        if (!oracle_det(generator(label)).is_zero()) {
            o.failures.insert(label.str());
        }
    }
    o.detail = " A1..A10, B2, D4, E6-8, F4, G2 and " + std::to_string(affine) + " affine determinants";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    const MatrixQ h{{2, Rational(-7, 2)}, {-1, 2}};
    const MatrixQ t{{2, -1}, {Rational(-7, 2), 2}};
    if (!oracle::all_principal_minors(h, true)) {
        o.failures.insert("virtual_pd");
    }
    const NotionReport g = is_generalized_psd(h);
    if (g.verdict || !witness_valid(h, g)) {
        o.failures.insert("generalized witness");
    }
    if (quadratic_form(h, Vector{1, 1}) != Rational(-1, 2)) {
        o.failures.insert("x'Hx");
    }
    const bool pair = oracle::all_principal_minors(t, false) && !oracle::all_principal_minors(h + t, false) &&
                      !is_virtual_psd(h + t).verdict;
    if (!pair) {
        o.failures.insert("non-closure pair");
    }
    o.detail = " x = (1,1) gives -1/2; det(H + T) = " + oracle::laplace_det(h + t).str();
    return o;
}

Outcome run_suites(const std::vector<std::string>& names)
{
    Outcome o;
    for (const auto& name : names) {
        const SuiteResult r = run_suite(name);
        for (const auto& l : r.lines) {
            if (!l.note && !l.pass) {
                o.failures.insert(name + ": " + l.text);
            }
        }
        o.detail += " " + name;
    }
    return o;
}

Outcome criterion8()
{
    return run_suites({"symmetrization", "antisymmetric_perturbation", "permutation_invariance", "cofactor_expansion",
                       "eigenvalue_sign", "minor_recursion"});
}

Outcome criterion9()
{
    Outcome o;
    const ThresholdRecord e = epsilon(Rational::pow2(-50));
    Rational previous;
    std::string values;
    for (int n = 2; n <= 12; ++n) {
        const RootBracket b = mu(n, Rational::pow2(-50)).bracket;
        if (n > 2 && !(previous < b.lo)) {
            o.failures.insert("increasing at " + std::to_string(n));
        }
        if (!(b.hi < e.bracket.lo)) {
            o.failures.insert("below epsilon at " + std::to_string(n));
        }
        previous = b.hi;
    }
    const Rational above = e.bracket.hi + Rational(1, 100000);
    for (int n = 2; n <= 12; ++n) {
        const MatrixQ m = build({Family::B, n, Twist::Finite}, above).matrix();
        if (!oracle::generalized_psd(m, true)) {
            o.failures.insert("B" + std::to_string(n) + " not generalized PD above epsilon");
        }
    }
    o.detail = " mu_2 < ... < mu_12 < " + fixed(e.bracket.lo.to_long_double()) + "; B2..B12 PD at " +
               fixed(above.to_long_double(), 6);
    return o;
}

Outcome criterion10()
{
    Outcome o;
    const QuarticChecks q = quartic_checks();
    const PolynomialQ f{Rational(9, 4), Rational(-35, 2), Rational(85, 4), Rational(-33, 4), 1};
    if (q.f != f) {
        o.failures.insert("f_x");
    }
    if (q.discriminant != Rational(12567329, 4096)) {
        o.failures.insert("discriminant");
    }
    for (const auto& c : rational_root_candidates(q.resolvent)) {
        if (q.resolvent(c).is_zero()) {
            o.failures.insert("resolvent root " + c.str());
        }
    }
    o.detail = " discriminant " + q.discriminant.str() + "; resolvent " + q.resolvent.str() + ", " +
               std::to_string(rational_root_candidates(q.resolvent).size()) + " candidates, none a root";
    return o;
}

Outcome criterion11()
{
    Outcome o;
    const std::string psd_expected =
        "A1 A2 A3 A4 A5 A6 A7 A8 A9 A10 B2 B3 B4 B5 B6 B7 B8 B9 C3 C4 C5 C6 C7 C8 C9 D4 D5 D6 D7 D8 D9 D10 "
        "E6 E7 E8 F4 G2 A1(1) A2(1) A3(1) A4(1) A5(1) A6(1) A7(1) A8(1) A9(1) A10(1) D4(1) D5(1) D6(1) D7(1) "
        "D8(1) D9(1) D10(1) E6(1) E7(1) E8(1)";
    const std::string pd_expected =
        "A1 A2 A3 A4 A5 A6 A7 A8 A9 A10 B2 B3 B4 B5 B6 B7 B8 C3 C4 C5 C6 C7 C8 D4 D5 D6 D7 D8 D9 D10 E6 E7 E8";
    std::string psd;
    std::string pd;
    for (const auto& label : all_labels(10, true, true)) {
        const MatrixQ m = generator(label);
        if (is_generalized_psd(m).verdict) {
            psd += (psd.empty() ? "" : " ") + label.str();
        }
        if (is_generalized_psd(m, true).verdict) {
            pd += (pd.empty() ? "" : " ") + label.str();
        }
    }
    if (psd != psd_expected) {
        o.failures.insert("psd list: " + psd);
    }
    if (pd != pd_expected) {
        o.failures.insert("pd list: " + pd);
    }
    o.detail = " semi-definite list has " + std::to_string(std::count(psd.begin(), psd.end(), ' ') + 1) +
               " labels, strict list " + std::to_string(std::count(pd.begin(), pd.end(), ' ') + 1);
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"mu table reproduction", criterion1},
        {"epsilon", criterion2},
        {"finite threshold flips", criterion3},
        {"affine thresholds", criterion4},
        {"oracle equivalence", criterion5},
        {"determinants at h = 2", criterion6},
        {"counterexample fixtures", criterion7},
        {"property suites", criterion8},
        {"monotone convergence", criterion9},
        {"quartic numerics", criterion10},
        {"h = 2 membership lists", criterion11},
    };
    bool unexpected = false;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.failures.insert(std::string("exception: ") + e.what());
        }
        o.pass = o.failures.empty();
        std::cout << "criterion " << index << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " -"
                  << o.detail << "\n";
        if (o.pass) {
            continue;
        }
        std::vector<std::string> surprising;
        for (const auto& f : o.failures) {
            if (!o.expected_failures.count(f)) {
                surprising.push_back(f);
            }
        }
        const bool exact_match = surprising.empty() && o.failures == o.expected_failures;
        if (exact_match) {
            std::cout << "  failure matches the documented defect exactly (" << o.failures.size()
                      << " point" << (o.failures.size() == 1 ? "" : "s") << ")\n";
        } else {
            unexpected = true;
            for (const auto& f : o.failures) {
                std::cout << "  failed: " << f << (o.expected_failures.count(f) ? " (documented)" : "") << "\n";
            }
            for (const auto& f : o.expected_failures) {
                if (!o.failures.count(f)) {
                    std::cout << "  documented defect did not reproduce: " << f << "\n";
                }
            }
        }
    }
    std::cout << (unexpected ? "acceptance: unexpected failures\n"
                             : "acceptance: every failure is a documented defect in a quoted constant\n");
    return unexpected ? 1 : 0;
}
