#include "shuhan/definiteness.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "shuhan/cartan.hpp"
#include "shuhan/errors.hpp"
#include "shuhan/linalg.hpp"
#include "shuhan/roots.hpp"

namespace shuhan {

std::string notion_name(Notion notion)
{
    switch (notion) {
    case Notion::SymPSD: return "sym_psd";
    case Notion::SymPD: return "sym_pd";
    case Notion::VirtualPSD: return "virtual_psd";
    case Notion::VirtualPD: return "virtual_pd";
    case Notion::GeneralizedPSD: return "generalized_psd";
    case Notion::GeneralizedPD: return "generalized_pd";
    }
    return "?";
}

Notion parse_notion(std::string_view text)
{
    for (Notion n : kAllNotions) {
        if (notion_name(n) == text) {
            return n;
        }
    }
    throw InvalidArgument("unknown notion '" + std::string(text) + "'");
}

bool is_strict(Notion notion)
{
    return notion == Notion::SymPD || notion == Notion::VirtualPD || notion == Notion::GeneralizedPD;
}

Notion semidefinite_of(Notion notion)
{
    switch (notion) {
    case Notion::SymPD: return Notion::SymPSD;
    case Notion::VirtualPD: return Notion::VirtualPSD;
    case Notion::GeneralizedPD: return Notion::GeneralizedPSD;
    default: return notion;
    }
}

Notion strict_of(Notion notion)
{
    switch (notion) {
    case Notion::SymPSD: return Notion::SymPD;
    case Notion::VirtualPSD: return Notion::VirtualPD;
    case Notion::GeneralizedPSD: return Notion::GeneralizedPD;
    default: return notion;
    }
}

const NotionReport& ClassificationReport::at(Notion notion) const
{
    for (const auto& r : verdicts) {
        if (r.notion == notion) {
            return r;
        }
    }
    throw InvalidArgument("notion missing from report");
}

CheckLimits CheckLimits::from_env()
{
    CheckLimits limits;
    if (const char* env = std::getenv("SHUHAN_ORDER_CAP")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 2) {
                limits.order_cap = static_cast<std::size_t>(cap);
            }
        } catch (const std::exception&) {
            // Malformed values keep the default.
        }
    }
    return limits;
}

namespace {

void enforce_cap(const MatrixQ& m, const CheckLimits& limits)
{
    if (m.order() > limits.order_cap) {
        throw ResourceLimit("principal-minor enumeration refused: order " + std::to_string(m.order()) +
                            " exceeds cap " + std::to_string(limits.order_cap));
    }
}

struct MinorScan {
    std::optional<IndexSet> first_negative;
    std::optional<IndexSet> first_nonpositive;
};

// First failures in subset order; stops once every requested one is found.
MinorScan scan_minors(const MatrixQ& m, bool need_negative, bool need_nonpositive)
{
    MinorScan scan;
    for_each_subset(m.order(), [&](const IndexSet& s) {
        const int sign = det_exact(principal_submatrix(m, s)).sign();
        if (sign < 0 && !scan.first_negative) {
            scan.first_negative = s;
        }
        if (sign <= 0 && !scan.first_nonpositive) {
            scan.first_nonpositive = s;
        }
        const bool done_neg = !need_negative || scan.first_negative.has_value();
        const bool done_pos = !need_nonpositive || scan.first_nonpositive.has_value();
        return !(done_neg && done_pos);
    });
    return scan;
}

NotionReport virtual_report(bool strict, const std::optional<IndexSet>& failure)
{
    NotionReport r;
    r.notion = strict ? Notion::VirtualPD : Notion::VirtualPSD;
    r.verdict = !failure.has_value();
    if (failure) {
        r.witness = *failure;
    }
    return r;
}

// For symmetric s: PSD iff every elementary symmetric function of the
// eigenvalues is >= 0; PD additionally needs det > 0.
bool sym_verdict(const MatrixQ& s, bool strict)
{
    const PolynomialQ p = char_poly(s);
    const std::size_t n = s.order();
    // p = sum c_k x^k with c_k = (-1)^(n-k) e_(n-k).
    for (std::size_t k = 0; k < n; ++k) {
        Rational e = p.coeff(k);
        if ((n - k) % 2 == 1) {
            e = -e;
        }
        if (e.sign() < 0) {
            return false;
        }
        if (strict && k == 0 && e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_nonzero(const Vector& x)
{
    return std::any_of(x.begin(), x.end(), [](const Rational& v) { return !v.is_zero(); });
}

bool breaks(const MatrixQ& s, const Vector& x, bool strict)
{
    if (!is_nonzero(x)) {
        return false;
    }
    const int sign = quadratic_form(s, x).sign();
    return strict ? sign <= 0 : sign < 0;
}

// floor(v + 1/2)
Integer round_half_up(const Rational& v)
{
    const Rational shifted = v + Rational(1, 2);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.num().get_mpz_t(), shifted.den().get_mpz_t());
    return q;
}

// Small-denominator approximations of x, tried before x itself.
std::optional<Vector> simplest_breaking(const MatrixQ& s, const Vector& x, bool strict)
{
    Rational scale;
    for (const auto& v : x) {
        scale = std::max(scale, v.abs());
    }
    if (scale.is_zero()) {
        return std::nullopt;
    }
    for (long bits : {0L, 1L, 2L, 3L, 4L, 6L, 8L, 12L, 16L, 24L, 32L}) {
        const Rational factor = Rational::pow2(bits) / scale;
        Vector z;
        z.reserve(x.size());
        for (const auto& v : x) {
            z.emplace_back(round_half_up(v * factor));
        }
        if (breaks(s, z, strict)) {
            return z;
        }
    }
    if (breaks(s, x, strict)) {
        const Integer l = common_denominator(x);
        Vector z = x;
        for (auto& v : z) {
            v *= Rational(l);
        }
        return z;
    }
    return std::nullopt;
}

} // namespace

std::optional<Vector> negative_direction(const MatrixQ& s, bool strict)
{
    if (!s.is_symmetric()) {
        throw InvalidArgument("negative_direction needs a symmetric matrix");
    }
    if (s.order() == 0 || sym_verdict(s, strict)) {
        return std::nullopt;
    }
    const std::size_t n = s.order();
    const PolynomialQ p = char_poly(s);
    RootBracket b = isolate_smallest_root(p);
    std::vector<Vector> rhs;
    rhs.emplace_back(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n);
        e[j] = Rational(1);
        rhs.push_back(std::move(e));
    }
    for (int attempt = 0; attempt < 400; ++attempt) {
        if (!b.is_exact()) {
            const Rational simple = simplest_between(b.lo, b.hi);
            if (simple != b.lo && p(simple).is_zero()) {
                b.lo = b.hi = simple;
            }
        }
        if (b.is_exact()) {
            // Eigenvector of the smallest eigenvalue q: x^T s x = q |x|^2.
            for (const auto& x : nullspace(s.shifted(-b.lo))) {
                if (auto w = simplest_breaking(s, x, strict)) {
                    return w;
                }
            }
            throw std::logic_error("exact eigenvector failed to certify a failing matrix");
        }
        // (s - qE)^-1 r is dominated by the eigenvector nearest q.
        const Rational q = b.midpoint();
        const MatrixQ shifted = s.shifted(-q);
        for (const auto& r : rhs) {
            if (auto x = solve(shifted, r)) {
                if (auto w = simplest_breaking(s, *x, strict)) {
                    return w;
                }
            }
        }
        b = refine(b, b.width() / Rational(256));
    }
    throw std::logic_error("witness search did not converge");
}

NotionReport is_virtual_psd(const MatrixQ& m, bool strict, const CheckLimits& limits)
{
    enforce_cap(m, limits);
    const MinorScan scan = scan_minors(m, !strict, strict);
    return virtual_report(strict, strict ? scan.first_nonpositive : scan.first_negative);
}

NotionReport is_sym_psd(const MatrixQ& m, bool strict)
{
    if (!m.is_symmetric()) {
        throw InvalidArgument("symmetric definiteness needs a symmetric matrix");
    }
    NotionReport r;
    r.notion = strict ? Notion::SymPD : Notion::SymPSD;
    r.verdict = sym_verdict(m, strict);
    if (!r.verdict) {
        r.witness = *negative_direction(m, strict);
    }
    return r;
}

NotionReport is_generalized_psd(const MatrixQ& m, bool strict)
{
    NotionReport r = is_sym_psd(symmetrize(m), strict);
    r.notion = strict ? Notion::GeneralizedPD : Notion::GeneralizedPSD;
    return r;
}

bool eigen_nonneg_check(const MatrixQ& m)
{
    if (m.order() == 0) {
        return true;
    }
    return count_roots_below(char_poly(m), Rational(0)) == 0;
}

ClassificationReport classify(const MatrixQ& m, const CheckLimits& limits)
{
    enforce_cap(m, limits);
    ClassificationReport report;
    report.order = m.order();
    report.symmetric = m.is_symmetric();
    const MinorScan scan = scan_minors(m, true, true);
    for (Notion notion : kAllNotions) {
        const bool strict = is_strict(notion);
        switch (notion) {
        case Notion::SymPSD:
        case Notion::SymPD:
            if (report.symmetric) {
                report.verdicts.push_back(is_sym_psd(m, strict));
            } else {
                NotionReport r;
                r.notion = notion;
                r.applicable = false;
                report.verdicts.push_back(r);
            }
            break;
        case Notion::VirtualPSD:
        case Notion::VirtualPD:
            report.verdicts.push_back(
                virtual_report(strict, strict ? scan.first_nonpositive : scan.first_negative));
            break;
        case Notion::GeneralizedPSD:
        case Notion::GeneralizedPD:
            report.verdicts.push_back(is_generalized_psd(m, strict));
            break;
        }
    }
    return report;
}

bool witness_valid(const MatrixQ& m, const NotionReport& report)
{
    const bool strict = is_strict(report.notion);
    if (report.verdict) {
        return std::holds_alternative<std::monostate>(report.witness);
    }
    if (const auto* subset = std::get_if<IndexSet>(&report.witness)) {
        const int sign = principal_minor(m, *subset).sign();
        return strict ? sign <= 0 : sign < 0;
    }
    if (const auto* x = std::get_if<Vector>(&report.witness)) {
        return x->size() == m.order() && breaks(m, *x, strict);
    }
    return false;
}

std::string gcm_type_name(GcmType type)
{
    switch (type) {
    case GcmType::Finite: return "finite";
    case GcmType::Affine: return "affine";
    case GcmType::Indefinite: return "indefinite";
    }
    return "?";
}

GcmType gcm_classify(const MatrixQ& m, const CheckLimits& limits)
{
    if (m.order() == 0) {
        throw InvalidArgument("empty matrix is not a generalized Cartan matrix");
    }
    if (auto why = shuhan_violation(m, Rational(2))) {
        throw InvalidArgument("not a generalized Cartan matrix: " + *why);
    }
    if (!is_indecomposable(m)) {
        throw InvalidArgument("generalized Cartan matrix is decomposable");
    }
    enforce_cap(m, limits);
    const std::size_t n = m.order();
    bool proper_positive = true;
    for_each_subset(n, [&](const IndexSet& s) {
        if (s.size() == n) {
            return false;
        }
        if (det_exact(principal_submatrix(m, s)).sign() <= 0) {
            proper_positive = false;
            return false;
        }
        return true;
    });
    if (!proper_positive) {
        return GcmType::Indefinite;
    }
    const int det = det_exact(m).sign();
    if (det > 0) {
        return GcmType::Finite;
    }
    return det == 0 ? GcmType::Affine : GcmType::Indefinite;
}

} // namespace shuhan
