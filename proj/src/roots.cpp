#include "shuhan/roots.hpp"

#include "shuhan/errors.hpp"

namespace shuhan {

SturmChain::SturmChain(const PolynomialQ& p)
{
    if (p.is_zero()) {
        throw InvalidArgument("Sturm chain of the zero polynomial");
    }
    seq_.push_back(p);
    PolynomialQ next = p.derivative();
    while (!next.is_zero()) {
        seq_.push_back(next);
        const auto& a = seq_[seq_.size() - 2];
        const auto& b = seq_.back();
        next = -(a.divmod(b).second);
    }
}

int SturmChain::variations_right_of(const Rational& x) const
{
    int variations = 0;
    int last = 0;
    for (const auto& p : seq_) {
        const Rational v = p(x);
        const int s = v.is_zero() ? p.sign_right_of(x) : v.sign();
        if (s != 0) {
            if (last != 0 && s != last) {
                ++variations;
            }
            last = s;
        }
    }
    return variations;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const
{
    if (!(lo < hi)) {
        throw InvalidArgument("Sturm count needs lo < hi");
    }
    return variations_right_of(lo) - variations_right_of(hi);
}

Rational default_width()
{
    return Rational::pow2(-40);
}

int sturm_count(const PolynomialQ& poly, const Rational& lo, const Rational& hi)
{
    return SturmChain(poly).count(lo, hi);
}

Rational cauchy_bound(const PolynomialQ& poly)
{
    if (poly.is_zero()) {
        throw InvalidArgument("root bound of the zero polynomial");
    }
    Rational m;
    const Rational lead = poly.leading().abs();
    for (int k = 0; k < poly.degree(); ++k) {
        const Rational r = poly.coeff(static_cast<std::size_t>(k)).abs() / lead;
        if (m < r) {
            m = r;
        }
    }
    return m + 1;
}

int count_roots_below(const PolynomialQ& poly, const Rational& x)
{
    const SturmChain chain(poly);
    const Rational bound = cauchy_bound(poly);
    const Rational lo = -bound;
    if (x <= lo) {
        return 0;
    }
    const int up_to_x = chain.count(lo, x);
    return poly(x).is_zero() ? up_to_x - 1 : up_to_x;
}

namespace {

enum class Pick { Largest, Smallest };

RootBracket isolate(const PolynomialQ& poly, Pick pick)
{
    const SturmChain chain(poly);
    const Rational bound = cauchy_bound(poly);
    Rational lo = -bound;
    Rational hi = bound;
    if (chain.count(lo, hi) == 0) {
        throw InvalidArgument("polynomial " + poly.str() + " has no real roots");
    }
    const Rational two(2);
    while (chain.count(lo, hi) > 1) {
        const Rational mid = (lo + hi) / two;
        if (pick == Pick::Largest) {
            (chain.count(mid, hi) >= 1 ? lo : hi) = mid;
        } else {
            (chain.count(lo, mid) >= 1 ? hi : lo) = mid;
        }
    }
    if (poly(hi).is_zero()) {
        return {hi, hi, poly};
    }
    return {lo, hi, poly};
}

} // namespace

RootBracket isolate_largest_root(const PolynomialQ& poly)
{
    return isolate(poly, Pick::Largest);
}

RootBracket isolate_smallest_root(const PolynomialQ& poly)
{
    return isolate(poly, Pick::Smallest);
}

RootBracket refine(const RootBracket& bracket, const Rational& width)
{
    if (width.sign() <= 0) {
        throw InvalidArgument("refinement width must be positive");
    }
    if (bracket.is_exact()) {
        return bracket;
    }
    RootBracket b = bracket;
    if (b.poly(b.hi).is_zero()) {
        b.lo = b.hi;
        return b;
    }
    const SturmChain chain(b.poly);
    const Rational two(2);
    while (b.hi - b.lo > width) {
        const Rational simple = simplest_between(b.lo, b.hi);
        if (simple != b.lo && b.poly(simple).is_zero()) {
            b.lo = b.hi = simple;
            return b;
        }
        const Rational mid = (b.lo + b.hi) / two;
        if (b.poly(mid).is_zero()) {
            b.lo = b.hi = mid;
            return b;
        }
        (chain.count(b.lo, mid) == 1 ? b.hi : b.lo) = mid;
    }
    return b;
}

int RootBracket::compare(const Rational& x) const
{
    if (is_exact()) {
        return lo < x ? -1 : (lo == x ? 0 : 1);
    }
    if (x <= lo) {
        return 1;
    }
    if (x > hi) {
        return -1;
    }
    // x in (lo, hi]: the unique root there equals x iff poly(x) == 0.
    if (poly(x).is_zero()) {
        return 0;
    }
    return SturmChain(poly).count(lo, x) == 1 ? -1 : 1;
}

} // namespace shuhan
