#include "shuhan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/recurrences.hpp"

namespace shuhan {

bool SuiteResult::passed() const
{
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.note || l.pass; });
}

Rational random_rational(Rng& rng, long lo, long hi, long max_den)
{
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    const long num = std::uniform_int_distribution<long>(lo * den, hi * den)(rng);
    return Rational(num, den);
}

MatrixQ random_matrix(Rng& rng, std::size_t n, long bound, long max_den)
{
    MatrixQ m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = random_rational(rng, -bound, bound, max_den);
        }
    }
    return m;
}

MatrixQ random_shuhan(Rng& rng, std::size_t n, const Rational& h)
{
    MatrixQ m = MatrixQ::diagonal(n, h);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<long> big(2, 3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (kind(rng)) {
            case 2: m(i, j) = m(j, i) = Rational(-1); break;
            case 3: m(i, j) = m(j, i) = Rational(-2); break;
            case 4: m(i, j) = Rational(-big(rng)); m(j, i) = Rational(-1); break;
            case 5: m(i, j) = Rational(-1); m(j, i) = Rational(-big(rng)); break;
            default: break;
            }
        }
    }
    return m;
}

bool notion_holds(const CartanLabel& label, Notion notion, const Rational& h)
{
    const MatrixQ m = build(label, h).matrix();
    const bool strict = is_strict(notion);
    switch (semidefinite_of(notion)) {
    case Notion::SymPSD: return is_sym_psd(m, strict).verdict;
    case Notion::VirtualPSD: return is_virtual_psd(m, strict).verdict;
    default: return is_generalized_psd(m, strict).verdict;
    }
}

FlipResult check_flip(const CartanLabel& label, Notion notion, const RootBracket& bracket)
{
    const Notion psd = semidefinite_of(notion);
    const Notion pd = strict_of(psd);
    const Rational delta = Rational::pow2(-30);
    FlipResult r;
    const Rational above = bracket.hi + delta;
    r.above = notion_holds(label, psd, above) && notion_holds(label, pd, above);
    const Rational below = bracket.lo - delta;
    if (below.sign() >= 0) {
        r.below = !notion_holds(label, psd, below) && !notion_holds(label, pd, below);
    }
    if (bracket.is_exact()) {
        r.at = notion_holds(label, psd, bracket.lo) && !notion_holds(label, pd, bracket.lo);
    }
    return r;
}

bool expected_generalized_psd_at_2(const CartanLabel& label)
{
    if (label.is_symmetric()) {
        return true; // A, D, E finite and their untwisted affine versions
    }
    if (label.is_affine()) {
        return false;
    }
    switch (label.family) {
    case Family::B:
    case Family::C: return label.rank <= 9;
    case Family::F:
    case Family::G: return true;
    default: return false;
    }
}

bool expected_generalized_pd_at_2(const CartanLabel& label)
{
    if (label.is_affine()) {
        return false;
    }
    if (label.is_symmetric()) {
        return true;
    }
    return (label.family == Family::B || label.family == Family::C) && label.rank <= 8;
}

namespace {

struct Suite {
    std::string name;
    std::vector<std::string> aliases;
    std::function<void(SuiteResult&, Rng&)> run;
};

void check(SuiteResult& r, bool pass, std::string text)
{
    r.lines.push_back({std::move(text), pass, false});
}

void note(SuiteResult& r, std::string text)
{
    r.lines.push_back({std::move(text), true, true});
}

std::string fixed(long double v, int digits = 12)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string sci(long double v)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

std::string count_text(std::size_t ok, std::size_t total)
{
    return std::to_string(ok) + "/" + std::to_string(total);
}

Vector random_vector(Rng& rng, std::size_t n)
{
    Vector x(n);
    for (auto& v : x) {
        v = random_rational(rng, -3, 3, 4);
    }
    return x;
}

MatrixQ random_antisymmetric(Rng& rng, std::size_t n)
{
    MatrixQ t(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            t(i, j) = random_rational(rng, -3, 3, 3);
            t(j, i) = -t(i, j);
        }
    }
    return t;
}

MatrixQ gram(Rng& rng, std::size_t n)
{
    const MatrixQ g = random_matrix(rng, n, 3, 2);
    return g.transpose() * g;
}

std::vector<bool> verdicts(const ClassificationReport& r)
{
    std::vector<bool> v;
    for (const auto& n : r.verdicts) {
        v.push_back(n.applicable && n.verdict);
    }
    return v;
}

const MatrixQ kCounterexample{{2, Rational(-7, 2)}, {-1, 2}};

// --- suites -----------------------------------------------------------------

void symmetrization(SuiteResult& r, Rng& rng)
{
    std::size_t same = 0;
    std::size_t forms = 0;
    const std::size_t total = 80;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 1 + k % 5;
        MatrixQ m = random_matrix(rng, n, 3, 2);
        if (k % 2 == 0) {
            m = gram(rng, n) + random_antisymmetric(rng, n);
        }
        const MatrixQ s = symmetrize(m);
        const bool g = is_generalized_psd(m).verdict == is_sym_psd(s).verdict &&
                       is_generalized_psd(m, true).verdict == is_sym_psd(s, true).verdict;
        same += g ? 1 : 0;
        bool f = true;
        for (int t = 0; t < 5; ++t) {
            const Vector x = random_vector(rng, n);
            f = f && quadratic_form(m, x) == quadratic_form(s, x);
        }
        forms += f ? 1 : 0;
    }
    check(r, same == total, "generalized verdict equals symmetric verdict of (H+H')/2: " + count_text(same, total));
    check(r, forms == total, "x'Hx equals x'((H+H')/2)x for random x: " + count_text(forms, total));
    bool idempotent = true;
    for (int k = 0; k < 20; ++k) {
        const MatrixQ a = random_matrix(rng, 4, 3, 3);
        const MatrixQ b = random_matrix(rng, 4, 3, 3);
        idempotent = idempotent && symmetrize(symmetrize(a)) == symmetrize(a) &&
                     symmetrize(a + b) == symmetrize(a) + symmetrize(b);
    }
    check(r, idempotent, "symmetrization is idempotent and additive");
}

void antisymmetric_perturbation(SuiteResult& r, Rng& rng)
{
    std::size_t ok = 0;
    const std::size_t total = 200;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 1 + k % 6;
        const MatrixQ h = gram(rng, n);
        const MatrixQ t = random_antisymmetric(rng, n);
        ok += det_exact(h + t) >= det_exact(h) ? 1 : 0;
    }
    check(r, ok == total, "det(H+T) >= det(H) for PSD H, antisymmetric T: " + count_text(ok, total));
    std::size_t strict_ok = 0;
    const std::size_t pd_total = 60;
    for (std::size_t k = 0; k < pd_total; ++k) {
        const std::size_t n = 2 + k % 5;
        const MatrixQ h = gram(rng, n) + MatrixQ::identity(n);
        MatrixQ t = random_antisymmetric(rng, n);
        if (t == MatrixQ(n)) {
            t(0, 1) = Rational(1);
            t(1, 0) = Rational(-1);
        }
        const bool equal_at_zero = det_exact(h + MatrixQ(n)) == det_exact(h);
        const bool strict = det_exact(h + t) > det_exact(h);
        strict_ok += equal_at_zero && strict ? 1 : 0;
    }
    check(r, strict_ok == pd_total,
          "PD H: equality exactly when T = 0: " + count_text(strict_ok, pd_total));
}

void counterexample(SuiteResult& r, Rng&)
{
    const MatrixQ& h = kCounterexample;
    const auto vpd = is_virtual_psd(h, true);
    check(r, vpd.verdict, "H = [[2,-7/2],[-1,2]] is virtual positive-definite");
    const auto gen = is_generalized_psd(h);
    check(r, !gen.verdict && witness_valid(h, gen),
          "H fails generalized PSD with a verified witness");
    check(r, quadratic_form(h, Vector{1, 1}) == Rational(-1, 2), "x = (1,1) gives x'Hx = -1/2");
    check(r, !validate_shuhan(h, 2), "H is not a Shuhan matrix (non-integer entry)");
}

void sum_closure(SuiteResult& r, Rng& rng)
{
    const MatrixQ h = kCounterexample;
    const MatrixQ t{{2, -1}, {Rational(-7, 2), 2}};
    check(r, is_virtual_psd(h, true).verdict && is_virtual_psd(t, true).verdict,
          "H and T are each virtual positive-definite");
    const auto sum = is_virtual_psd(h + t);
    check(r, !sum.verdict && witness_valid(h + t, sum),
          "H + T fails virtual PSD (det = " + det_exact(h + t).str() + ")");
    std::size_t ok = 0;
    const std::size_t total = 40;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 1 + k % 5;
        const MatrixQ a = gram(rng, n) + random_antisymmetric(rng, n);
        const MatrixQ b = gram(rng, n) + random_antisymmetric(rng, n);
        const Rational lambda = random_rational(rng, 0, 2, 5) + Rational(1, 7);
        ok += is_generalized_psd(a + b).verdict && is_generalized_psd(a.shifted(lambda), true).verdict ? 1 : 0;
    }
    check(r, ok == total, "generalized PSD is closed under sums and + lambda E is strict: " + count_text(ok, total));
}

void permutation_invariance(SuiteResult& r, Rng& rng)
{
    std::size_t ok = 0;
    const std::size_t total = 100;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 2 + k % 5;
        const MatrixQ m = random_shuhan(rng, n, random_rational(rng, 0, 4, 4));
        std::vector<std::size_t> image(n);
        for (std::size_t i = 0; i < n; ++i) {
            image[i] = i;
        }
        std::shuffle(image.begin(), image.end(), rng);
        const Permutation sigma(image);
        const MatrixQ p = permute(m, sigma);
        const bool same = det_exact(p) == det_exact(m) && verdicts(classify(p)) == verdicts(classify(m)) &&
                          permute(p, sigma.inverse()) == m;
        ok += same ? 1 : 0;
    }
    check(r, ok == total, "determinant and all six verdicts are invariant under H -> H_sigma: " +
                              count_text(ok, total));
}

void minor_recursion(SuiteResult& r, Rng& rng)
{
    std::size_t ok = 0;
    const std::size_t total = 100;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 2 + k % 5;
        const MatrixQ m = random_shuhan(rng, n, random_rational(rng, 0, 4, 4));
        bool all_sub = true;
        for (std::size_t drop = 0; drop < n; ++drop) {
            all_sub = all_sub && is_virtual_psd(principal_submatrix(m, complement(n, {drop}))).verdict;
        }
        ok += is_virtual_psd(m).verdict == (all_sub && det_exact(m).sign() >= 0) ? 1 : 0;
    }
    check(r, ok == total,
          "virtual PSD iff every order-(n-1) principal submatrix is and det >= 0: " + count_text(ok, total));
    bool sub_shuhan = true;
    for (int k = 0; k < 30; ++k) {
        const Rational h = random_rational(rng, 0, 4, 4);
        const MatrixQ m = random_shuhan(rng, 6, h);
        sub_shuhan = sub_shuhan && validate_shuhan(principal_submatrix(m, {0, 2, 5}), h);
    }
    check(r, sub_shuhan, "principal submatrices of Shuhan matrices are Shuhan");
}

void cofactor_expansion(SuiteResult& r, Rng& rng)
{
    std::size_t ok = 0;
    const std::size_t total = 60;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 1 + k % 6;
        const MatrixQ m = random_matrix(rng, n, 4, 3);
        const Rational lambda = random_rational(rng, -3, 3, 5);
        std::vector<Rational> by_size(n + 1);
        by_size[0] = det_exact(m);
        for_each_subset(n, [&](const IndexSet& removed) {
            by_size[removed.size()] += complementary_principal_minor(m, removed);
            return true;
        });
        Rational sum;
        Rational power(1);
        for (std::size_t j = 0; j <= n; ++j) {
            sum += power * by_size[j];
            power *= lambda;
        }
        ok += sum == det_exact(m.shifted(lambda)) ? 1 : 0;
    }
    check(r, ok == total, "det(H + lambda E) equals the cofactor expansion: " + count_text(ok, total));
    std::size_t cp = 0;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t n = 1 + k % 6;
        const MatrixQ m = random_matrix(rng, n, 4, 3);
        const PolynomialQ p = char_poly(m);
        const auto sums = principal_minor_sums(m);
        bool same = true;
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational expected = (j % 2 == 0) ? sums[j] : -sums[j];
            same = same && p.coeff(n - j) == expected;
        }
        cp += same ? 1 : 0;
    }
    check(r, cp == total, "characteristic coefficients are signed principal-minor sums: " + count_text(cp, total));
}

void eigenvalue_sign(SuiteResult& r, Rng& rng)
{
    std::size_t found = 0;
    std::size_t ok = 0;
    while (found < 100) {
        const std::size_t n = 2 + found % 5;
        const MatrixQ m = random_shuhan(rng, n, random_rational(rng, 1, 5, 4));
        if (!is_virtual_psd(m).verdict) {
            continue;
        }
        ++found;
        ok += eigen_nonneg_check(m) ? 1 : 0;
    }
    check(r, ok == found, "virtual PSD samples have no negative real eigenvalue: " + count_text(ok, found));
    check(r, !eigen_nonneg_check(MatrixQ{{-1}}), "[[-1]] has a negative eigenvalue");
    check(r, !eigen_nonneg_check(build({Family::A, 3, Twist::Finite}, 1).matrix()),
          "A3 at h = 1 has a negative eigenvalue");
}

void gcm_types(SuiteResult& r, Rng&)
{
    std::size_t ok = 0;
    std::size_t total = 0;
    for (const auto& label : all_labels(10, true, true)) {
        ++total;
        const GcmType t = gcm_classify(generator(label));
        ok += t == (label.is_affine() ? GcmType::Affine : GcmType::Finite) ? 1 : 0;
    }
    check(r, ok == total, "every finite table is finite type, every affine table affine type: " +
                              count_text(ok, total));
    check(r, gcm_classify(MatrixQ{{2, -5}, {-1, 2}}) == GcmType::Indefinite, "[[2,-5],[-1,2]] is indefinite");
    check(r, gcm_classify(MatrixQ{{2, -3}, {-3, 2}}) == GcmType::Indefinite, "[[2,-3],[-3,2]] is indefinite");
}

std::vector<SequenceId> oracle_sequences()
{
    std::vector<SequenceId> ids;
    for (int n = 1; n <= 12; ++n) {
        ids.push_back({Seq::A, n});
    }
    for (int n = 2; n <= 12; ++n) {
        ids.push_back({Seq::B, n});
        ids.push_back({Seq::HatB, n});
        ids.push_back({Seq::HatCAff1, n});
    }
    for (int n = 3; n <= 12; ++n) {
        ids.push_back({Seq::HatBAff1, n});
    }
    for (int n = 4; n <= 12; ++n) {
        ids.push_back({Seq::D, n});
    }
    for (int n = 6; n <= 8; ++n) {
        ids.push_back({Seq::E, n});
    }
    ids.push_back({Seq::F4, 4});
    ids.push_back({Seq::G2, 2});
    return ids;
}

void sequence_oracles(SuiteResult& r, Rng& rng)
{
    std::size_t poly_ok = 0;
    std::size_t value_ok = 0;
    const auto ids = oracle_sequences();
    for (const auto& id : ids) {
        const auto [label, variant] = *oracle_label(id);
        poly_ok += seq_poly(id) == det_in_h(label, variant) ? 1 : 0;
        bool values = true;
        for (int k = 0; k < 10; ++k) {
            const Rational h = random_rational(rng, 0, 4, 9);
            MatrixQ m = build(label, h).matrix();
            if (variant == Variant::Symmetrized) {
                m = symmetrize(m);
            }
            values = values && seq_eval(id, h) == det_exact(m);
        }
        value_ok += values ? 1 : 0;
    }
    check(r, poly_ok == ids.size(), "sequence polynomials equal determinant polynomials: " +
                                        count_text(poly_ok, ids.size()));
    check(r, value_ok == ids.size(), "sequence values equal determinants at 10 random h: " +
                                         count_text(value_ok, ids.size()));

    bool identities = true;
    for (int k = 0; k < 10; ++k) {
        const Rational h = random_rational(rng, 0, 4, 7);
        for (int n = 2; n <= 12; ++n) {
            identities = identities && seq_eval({Seq::B, n}, h) ==
                                           seq_eval({Seq::A, n}, h) - seq_eval({Seq::A, n - 2}, h);
            if (n >= 4) {
                identities = identities && seq_eval({Seq::D, n}, h) == h * seq_eval({Seq::B, n - 1}, h);
                identities = identities && seq_eval({Seq::HatB, n}, h) ==
                                               h * seq_eval({Seq::HatB, n - 1}, h) - seq_eval({Seq::HatB, n - 2}, h);
            }
        }
        for (int j = 6; j <= 8; ++j) {
            identities = identities && seq_eval({Seq::E, j}, h) == e_via_d(j, h);
        }
    }
    check(r, identities, "b = a_n - a_(n-2), d_n = h b_(n-1), hat_b three-term recurrence, both e routes");

    bool at_two = true;
    for (int n = 1; n <= 12; ++n) {
        at_two = at_two && seq_eval({Seq::HatB, n}, 2) == Rational(2) - Rational(n - 1, 4);
    }
    check(r, at_two, "hat_b_n(2) = 2 - (n-1)/4 for n <= 12");

    long double worst_radical = 0;
    for (int k = 1; k <= 40; ++k) {
        const Rational h = Rational(2) + Rational(k, 20);
        for (int n = 0; n <= 20; ++n) {
            const long double exact = seq_eval({Seq::A, n}, h).to_long_double();
            const long double rel = std::abs(closed_a_radical(n, h.to_long_double()) - exact) / std::abs(exact);
            worst_radical = std::max(worst_radical, rel);
        }
    }
    check(r, worst_radical < 1e-9L, "radical form of a_n matches on (2, 4], worst relative error " +
                                        sci(worst_radical));
    long double worst_trig = 0;
    for (int k = 0; k < 128; ++k) {
        const Rational h(k, 64);
        for (int n = 4; n <= 30; ++n) {
            for (Seq s : {Seq::A, Seq::B, Seq::D}) {
                const long double exact = seq_eval({s, n}, h).to_long_double();
                worst_trig = std::max(worst_trig, std::abs(closed_trig(s, n, h.to_long_double()) - exact));
            }
        }
    }
    check(r, worst_trig < 1e-9L, "trigonometric forms of a, b, d match on [0, 2), worst absolute error " +
                                     sci(worst_trig));
    const PolynomialQ e8 = seq_poly({Seq::E, 8});
    long double worst_e8 = 0;
    for (int k = 0; k <= 100; ++k) {
        const long double theta = std::numbers::pi_v<long double> / 18 * k / 100;
        worst_e8 = std::max(worst_e8, std::abs(e8_trig(theta) - e8.eval(2 * std::cos(theta))));
    }
    check(r, worst_e8 < 1e-9L, "e_8 trigonometric form matches the polynomial on [0, pi/18]");
    const long double e8_root = e8.eval(2 * std::cos(std::numbers::pi_v<long double> / 30));
    check(r, std::abs(e8_root) < 1e-9L, "e_8 vanishes at 2cos(pi/30): " + sci(e8_root));
    const RootBracket eps = epsilon().bracket;
    bool chain = true;
    for (int k = 1; k <= 5; ++k) {
        const Rational h = eps.hi + Rational(k, 7);
        for (int n = 3; n <= 12; ++n) {
            chain = chain && seq_eval({Seq::HatB, n}, h) > seq_eval({Seq::HatB, n - 1}, h);
        }
    }
    check(r, chain, "hat_b_n(h) > hat_b_(n-1)(h) > ... > hat_b_2(h) for h above epsilon, n <= 12");
}

void determinants(SuiteResult& r, Rng&)
{
    bool a = true;
    for (int n = 1; n <= 10; ++n) {
        a = a && det_exact(build({Family::A, n, Twist::Finite}, 2).matrix()) == Rational(n + 1);
    }
    check(r, a, "det A_n at h = 2 is n + 1 for n <= 10");
    const std::vector<std::pair<CartanLabel, long>> spots = {
        {{Family::B, 2, Twist::Finite}, 2}, {{Family::D, 4, Twist::Finite}, 4}, {{Family::E, 6, Twist::Finite}, 3},
        {{Family::E, 7, Twist::Finite}, 2}, {{Family::E, 8, Twist::Finite}, 1}, {{Family::F, 4, Twist::Finite}, 1},
        {{Family::G, 2, Twist::Finite}, 1},
    };
    for (const auto& [label, value] : spots) {
        const Rational d = det_exact(build(label, 2).matrix());
        check(r, d == Rational(value), "det " + label.str() + " at h = 2 is " + d.str());
    }
    std::size_t zero = 0;
    std::size_t total = 0;
    for (const auto& label : all_labels(10, false, true)) {
        ++total;
        zero += det_exact(build(label, 2).matrix()).is_zero() ? 1 : 0;
    }
    check(r, zero == total, "every affine determinant vanishes at h = 2: " + count_text(zero, total));
}

void mu_table(SuiteResult& r, Rng&)
{
    const Rational width(1, 1000000000000L);
    for (int n = 2; n <= 9; ++n) {
        const ThresholdRecord t = mu(n, width);
        const long double v = t.closed->eval();
        const bool inside = t.closed_form_consistent(0);
        std::string text = "mu_" + std::to_string(n) + " = " + t.closed->str() + " = " + fixed(v, 15) +
                           " inside [" + fixed(t.bracket.lo.to_long_double(), 15) + ", " +
                           fixed(t.bracket.hi.to_long_double(), 15) + "]";
        if (n == 2 || n == 9) {
            check(r, inside && t.bracket.is_exact() && t.bracket.lo == (n == 2 ? Rational(3, 2) : Rational(2)),
                  text + ", exact rational root");
        } else {
            check(r, inside, text);
        }
    }
    const long double printed = mu8_expression(kMu8PrintedRadicand).eval();
    note(r, "alpha with the misprinted radicand " + std::to_string(kMu8PrintedRadicand) + " gives " +
                fixed(printed, 12) + ", not mu_8");
}

void epsilon_suite(SuiteResult& r, Rng&)
{
    const ThresholdRecord e = epsilon(Rational(1, 10000000000L));
    const PolynomialQ g = epsilon_polynomial();
    check(r, e.bracket.width() <= Rational(1, 10000000000L), "bracket width <= 1e-10");
    check(r, g(e.bracket.lo).sign() < 0 && g(e.bracket.hi).sign() > 0, "g(lo) < 0 < g(hi)");
    check(r, std::abs(e.approx - 2.04998L) < 5e-6L, "epsilon = " + fixed(e.approx, 12) + " agrees with 2.04998");
    check(r, std::abs(e.closed->eval() - e.approx) < 1e-10L, "trigonometric form " + fixed(e.closed->eval(), 15));
    check(r, sturm_count(g, Rational(2), Rational(3)) == 1, "g has exactly one root in (2, 3]");
}

void monotone_mu(SuiteResult& r, Rng&)
{
    const ThresholdRecord e = epsilon(Rational::pow2(-50));
    std::vector<ThresholdRecord> ms;
    for (int n = 2; n <= 12; ++n) {
        ms.push_back(mu(n, Rational::pow2(-50)));
    }
    bool increasing = true;
    for (std::size_t k = 1; k < ms.size(); ++k) {
        increasing = increasing && ms[k - 1].bracket.hi < ms[k].bracket.lo;
    }
    check(r, increasing, "mu_2 < mu_3 < ... < mu_12 with disjoint brackets");
    bool bounded = true;
    for (const auto& m : ms) {
        bounded = bounded && m.bracket.lo >= Rational(3, 2) && m.bracket.hi < e.bracket.lo;
    }
    check(r, bounded, "3/2 <= mu_n and mu_n < epsilon for n <= 12");
    bool corollary = true;
    for (int k = 1; k <= 3; ++k) {
        const Rational h = e.bracket.hi + Rational(k, 1000);
        for (int n = 2; n <= 12; ++n) {
            corollary = corollary && notion_holds({Family::B, n, Twist::Finite}, Notion::GeneralizedPD, h);
        }
    }
    check(r, corollary, "B_n is generalized positive-definite above epsilon for n <= 12");
}

std::vector<Notion> covered_notions(const CartanLabel& label)
{
    std::vector<Notion> out;
    if (label.is_symmetric()) {
        out.push_back(Notion::SymPSD);
    }
    out.push_back(Notion::VirtualPSD);
    const bool bc = !label.is_affine() && (label.family == Family::B || label.family == Family::C);
    if (!bc || label.rank <= 9) {
        out.push_back(Notion::GeneralizedPSD);
    }
    return out;
}

void flip_lines(SuiteResult& r, const std::vector<CartanLabel>& labels)
{
    std::size_t ok = 0;
    std::size_t total = 0;
    std::vector<std::string> bad;
    for (const auto& label : labels) {
        for (Notion notion : covered_notions(label)) {
            ++total;
            const ThresholdRecord t = threshold(label, notion);
            const FlipResult f = check_flip(label, notion, t.bracket);
            bool consistent = true;
            try {
                classify_family(label, t.bracket.hi + Rational::pow2(-30));
                if (t.bracket.lo >= Rational::pow2(-30)) {
                    classify_family(label, t.bracket.lo - Rational::pow2(-30));
                }
            } catch (const std::logic_error&) {
                consistent = false;
            }
            if (f.ok() && consistent && t.closed_form_consistent()) {
                ++ok;
            } else {
                bad.push_back(label.str() + "/" + notion_name(notion));
            }
        }
    }
    std::string text = "threshold flips (pass above, fail below, closed form inside): " + count_text(ok, total);
    for (const auto& b : bad) {
        text += " " + b;
    }
    check(r, ok == total, text);
}

void finite_thresholds(SuiteResult& r, Rng&)
{
    flip_lines(r, all_labels(10, true, false));
    check(r, threshold({Family::E, 8, Twist::Finite}, Notion::SymPSD).closed->str() == "2*cos(pi/30)",
          "E8 symmetric threshold is 2cos(pi/30)");
    bool uncovered = false;
    try {
        threshold({Family::B, 10, Twist::Finite}, Notion::GeneralizedPSD);
    } catch (const NoThreshold&) {
        uncovered = true;
    }
    check(r, uncovered, "B10 generalized has no table threshold");
}

void affine_thresholds(SuiteResult& r, Rng&)
{
    const auto labels = all_labels(8, false, true);
    flip_lines(r, labels);
    bool virtual_two = true;
    for (const auto& label : labels) {
        virtual_two = virtual_two && threshold(label, Notion::VirtualPSD).bracket.lo == Rational(2);
    }
    check(r, virtual_two, "virtual threshold is exactly 2 for every affine label");
    const Rational w = Rational::pow2(-50);
    bool lambda_ok = true;
    for (int n = 3; n <= 10; ++n) {
        const RootBracket b = lambda_eta(AffineKind::Lambda, n, w).bracket;
        lambda_ok = lambda_ok && (n == 3 ? b.lo * b.lo <= Rational(17, 4) && Rational(17, 4) <= b.hi * b.hi
                                         : b.hi * b.hi < Rational(17, 4));
    }
    check(r, lambda_ok, "lambda_n < sqrt(17)/2 for 4 <= n <= 10, equality at n = 3");
    bool eta_ok = true;
    for (int n = 2; n <= 10; ++n) {
        const RootBracket b = lambda_eta(AffineKind::Eta, n, w).bracket;
        eta_ok = eta_ok && (n == 2 ? b.lo * b.lo <= Rational(9, 2) && Rational(9, 2) <= b.hi * b.hi
                                   : b.hi * b.hi < Rational(9, 2));
    }
    check(r, eta_ok, "eta_n < 3sqrt(2)/2 for 3 <= n <= 10, equality at n = 2");
    for (int n = 4; n <= 8; ++n) {
        note(r, "B" + std::to_string(n) + "(1) generalized threshold is lambda_" + std::to_string(n) + " = " +
                    fixed(lambda_eta(AffineKind::Lambda, n).approx, 10) + ", below sqrt(17)/2");
    }
    for (int n = 3; n <= 8; ++n) {
        note(r, "C" + std::to_string(n) + "(1) generalized threshold is eta_" + std::to_string(n) + " = " +
                    fixed(lambda_eta(AffineKind::Eta, n).approx, 10) + ", below 3sqrt(2)/2");
    }
}

void cartan_h2(SuiteResult& r, Rng&)
{
    std::string psd_list;
    std::string pd_list;
    std::size_t ok = 0;
    std::size_t total = 0;
    for (const auto& label : all_labels(10, true, true)) {
        ++total;
        const MatrixQ m = generator(label);
        const bool psd = is_generalized_psd(m).verdict;
        const bool pd = is_generalized_psd(m, true).verdict;
        if (psd) {
            psd_list += " " + label.str();
        }
        if (pd) {
            pd_list += " " + label.str();
        }
        ok += psd == expected_generalized_psd_at_2(label) && pd == expected_generalized_pd_at_2(label) ? 1 : 0;
    }
    check(r, ok == total, "generalized verdicts at h = 2 match the membership table: " + count_text(ok, total));
    note(r, "generalized PSD at h = 2:" + psd_list);
    note(r, "generalized PD at h = 2:" + pd_list);
}

void strict_variants(SuiteResult& r, Rng&)
{
    struct Exact {
        CartanLabel label;
        Notion notion;
        Rational h;
    };
    const std::vector<Exact> cases = {
        {{Family::B, 2, Twist::Finite}, Notion::GeneralizedPSD, Rational(3, 2)},
        {{Family::B, 9, Twist::Finite}, Notion::GeneralizedPSD, Rational(2)},
        {{Family::F, 4, Twist::Finite}, Notion::GeneralizedPSD, Rational(2)},
        {{Family::G, 2, Twist::Finite}, Notion::GeneralizedPSD, Rational(2)},
        {{Family::A, 2, Twist::Aff2}, Notion::GeneralizedPSD, Rational(5, 2)},
        {{Family::G, 2, Twist::Aff1}, Notion::VirtualPSD, Rational(2)},
        {{Family::E, 8, Twist::Aff1}, Notion::SymPSD, Rational(2)},
    };
    for (const auto& c : cases) {
        const bool psd = notion_holds(c.label, c.notion, c.h);
        const bool pd = notion_holds(c.label, strict_of(c.notion), c.h);
        const bool above = notion_holds(c.label, strict_of(c.notion), c.h + Rational(1, 1000000));
        check(r, psd && !pd && above,
              c.label.str() + " at h = " + c.h.str() + ": " + notion_name(c.notion) + " holds, " +
                  notion_name(strict_of(c.notion)) + " fails, and holds just above");
    }
}

void quartic(SuiteResult& r, Rng&)
{
    const QuarticChecks q = quartic_checks();
    check(r, q.discriminant == kPrintedDiscriminant, "discriminant of f_x = " + q.discriminant.str());
    check(r, seq_poly({Seq::HatB, 8}) == q.f.compose(PolynomialQ{0, 0, 1}), "f_x(h^2) = hat_b_8(h)");
    check(r, q.printed_candidate_roots.empty(), "printed resolvent has no root among the " +
                                                    std::to_string(q.printed_candidates.size()) +
                                                    " listed candidates");
    check(r, q.printed_resolvent_roots.empty(), "printed resolvent has no rational root (full candidate set)");
    check(r, q.resolvent_roots.empty(), "resolvent " + q.resolvent.str() + " has no rational root");
    check(r, q.sign_change_at_mu8_squared, "f_x changes sign across the mu_8^2 bracket");
    const long double mu8 = mu(8, Rational::pow2(-62)).approx;
    check(r, std::abs(q.f.eval(mu8 * mu8)) < 1e-12L, "f_x(mu_8^2) vanishes to 1e-12");
    if (!q.discriminant_is_square) {
        note(r, "the discriminant is not a rational square");
    }
    if (q.resolvent != q.printed_resolvent) {
        note(r, "the printed resolvent constant -31861/64 differs from the computed " + q.resolvent.coeff(0).str());
    }
}

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"symmetrization", {"lemma_1_2"}, symmetrization},
        {"antisymmetric_perturbation", {"lemma_1_3"}, antisymmetric_perturbation},
        {"counterexample", {"prop_1_4"}, counterexample},
        {"sum_closure", {"remark_1_5"}, sum_closure},
        {"permutation_invariance", {"lemma_1_6"}, permutation_invariance},
        {"minor_recursion", {"prop_1_8"}, minor_recursion},
        {"cofactor_expansion", {"lemma_3_1"}, cofactor_expansion},
        {"eigenvalue_sign", {"prop_3_2"}, eigenvalue_sign},
        {"gcm_types", {"prop_3_3", "lemma_3_111"}, gcm_types},
        {"sequence_oracles", {"recurrences", "lemma_4_1", "lemma_4_2"}, sequence_oracles},
        {"determinants", {}, determinants},
        {"mu_table", {"prop_4_8"}, mu_table},
        {"epsilon", {}, epsilon_suite},
        {"monotone_mu", {"lemma_4_6", "lemma_4_7", "cor_4_18"}, monotone_mu},
        {"finite_thresholds", {"thm_4_4", "prop_4_3"}, finite_thresholds},
        {"affine_thresholds", {"prop_4_5", "prop_4_5p", "prop_4_11"}, affine_thresholds},
        {"cartan_h2", {"prop_4_13"}, cartan_h2},
        {"strict_variants", {"remark_4_17"}, strict_variants},
        {"quartic", {"remark_4_9"}, quartic},
    };
    return all;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : suites()) {
            n.push_back(s.name);
        }
        return n;
    }();
    return names;
}

std::optional<std::string> canonical_suite(std::string_view name)
{
    for (const auto& s : suites()) {
        if (s.name == name || std::find(s.aliases.begin(), s.aliases.end(), name) != s.aliases.end()) {
            return s.name;
        }
    }
    return std::nullopt;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed)
{
    const auto canonical = canonical_suite(name);
    if (!canonical) {
        throw InvalidArgument("unknown suite '" + std::string(name) + "'");
    }
    for (const auto& s : suites()) {
        if (s.name == *canonical) {
            SuiteResult result;
            result.name = s.name;
            Rng rng(seed);
            s.run(result, rng);
            return result;
        }
    }
    throw InvalidArgument("unknown suite");
}

} // namespace shuhan
