#pragma once

// Reference implementations that share no code path with the library's
// elimination, Sturm, or witness search. Slow by design.

#include <cstddef>
#include <vector>

#include "shuhan/matrix.hpp"
#include "shuhan/polynomial.hpp"
#include "shuhan/rational.hpp"

namespace oracle {

using shuhan::MatrixQ;
using shuhan::PolynomialQ;
using shuhan::Rational;

/// Laplace expansion along the first row.
inline Rational laplace_det(const MatrixQ& m)
{
    const std::size_t n = m.order();
    if (n == 0) {
        return Rational(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    Rational acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) {
            continue;
        }
        MatrixQ minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, k = 0; j < n; ++j) {
                if (j != c) {
                    minor(i - 1, k++) = m(i, j);
                }
            }
        }
        const Rational term = m(0, c) * laplace_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

/// det(xE - m) by Faddeev-LeVerrier, ascending coefficients.
inline PolynomialQ faddeev_leverrier(const MatrixQ& m)
{
    const std::size_t n = m.order();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    MatrixQ mk(n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        MatrixQ next = m * mk;
        for (std::size_t i = 0; i < n; ++i) {
            next(i, i) += c[n - k + 1];
        }
        mk = next;
        const MatrixQ am = m * mk;
        Rational trace;
        for (std::size_t i = 0; i < n; ++i) {
            trace += am(i, i);
        }
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return PolynomialQ(c);
}

inline MatrixQ submatrix(const MatrixQ& m, const std::vector<std::size_t>& idx)
{
    MatrixQ s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            s(i, j) = m(idx[i], idx[j]);
        }
    }
    return s;
}

/// Every nonempty principal minor >= 0 (> 0 when strict), by Laplace.
inline bool all_principal_minors(const MatrixQ& m, bool strict)
{
    const std::size_t n = m.order();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                idx.push_back(i);
            }
        }
        const int s = laplace_det(submatrix(m, idx)).sign();
        if (s < 0 || (strict && s == 0)) {
            return false;
        }
    }
    return true;
}

inline MatrixQ symmetric_part(const MatrixQ& m)
{
    MatrixQ s(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            s(i, j) = (m(i, j) + m(j, i)) / Rational(2);
        }
    }
    return s;
}

/// Symmetric matrices: PSD iff every principal minor >= 0, PD iff every one > 0.
inline bool generalized_psd(const MatrixQ& m, bool strict)
{
    return all_principal_minors(symmetric_part(m), strict);
}

/// Largest real root with a sign change, by scanning down from `upper` in steps
/// of 1/64 and bisecting the first sign change found. `upper` must exceed every root.
inline Rational largest_sign_change(const PolynomialQ& p, const Rational& upper, int iterations = 80)
{
    const Rational step(1, 64);
    Rational hi = upper;
    const int top = p(hi).sign();
    Rational lo = hi - step;
    while (p(lo).sign() == top) {
        hi = lo;
        lo -= step;
    }
    if (p(lo).is_zero()) {
        return lo;
    }
    for (int k = 0; k < iterations; ++k) {
        const Rational mid = (lo + hi) / Rational(2);
        const int s = p(mid).sign();
        if (s == 0) {
            return mid;
        }
        (s == top ? hi : lo) = mid;
    }
    return (lo + hi) / Rational(2);
}

} // namespace oracle
