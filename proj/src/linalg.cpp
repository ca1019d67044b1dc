#include "shuhan/linalg.hpp"

#include <algorithm>

#include "shuhan/errors.hpp"

namespace shuhan {

namespace {

// Fraction-free elimination on an integer matrix (row-major, consumed).
Integer bareiss(std::vector<Integer>& a, std::size_t n)
{
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[p * n + j]);
            }
            sign = -sign;
        }
        const Integer& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Integer lead = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& target = a[i * n + j];
                target = target * pivot - lead * a[k * n + j];
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    Integer det = a[n * n - 1];
    return sign < 0 ? Integer(-det) : det;
}

} // namespace

Rational det_exact(const MatrixQ& m)
{
    const std::size_t n = m.order();
    if (n == 0) {
        return Rational(1);
    }
    // Clear denominators row by row: det(m) = det(D m) / prod(D_i).
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_den = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m(i, j);
            a[i * n + j] = e.num() * (row_den / e.den());
        }
        scale *= row_den;
    }
    return Rational(bareiss(a, n), scale);
}

Rational principal_minor(const MatrixQ& m, const IndexSet& indices)
{
    IndexSet sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) {
        return Rational(1);
    }
    return det_exact(principal_submatrix(m, sorted));
}

Rational complementary_principal_minor(const MatrixQ& m, const IndexSet& removed)
{
    IndexSet sorted = removed;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return principal_minor(m, complement(m.order(), sorted));
}

PolynomialQ char_poly(const MatrixQ& m)
{
    const std::size_t n = m.order();
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    const MatrixQ negated = m * Rational(-1);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational x(static_cast<long>(k));
        nodes.push_back(x);
        values.push_back(det_exact(negated.shifted(x)));
    }
    return PolynomialQ::interpolate(nodes, values);
}

PolynomialQ det_in_h(const CartanLabel& label, Variant variant)
{
    const std::size_t n = label.order();
    MatrixQ base = generator(label);
    if (variant == Variant::Symmetrized) {
        base = symmetrize(base);
    }
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational h(static_cast<long>(k));
        nodes.push_back(h);
        values.push_back(det_exact(base.shifted(h - 2)));
    }
    return PolynomialQ::interpolate(nodes, values);
}

void for_each_subset(std::size_t n, const std::function<bool(const IndexSet&)>& visit)
{
    for (std::size_t size = 1; size <= n; ++size) {
        IndexSet s(size);
        for (std::size_t k = 0; k < size; ++k) {
            s[k] = k;
        }
        while (true) {
            if (!visit(s)) {
                return;
            }
            // Next combination in lexicographic order.
            std::size_t k = size;
            while (k > 0 && s[k - 1] == n - size + (k - 1)) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++s[k - 1];
            for (std::size_t j = k; j < size; ++j) {
                s[j] = s[j - 1] + 1;
            }
        }
    }
}

std::vector<Rational> principal_minor_sums(const MatrixQ& m)
{
    std::vector<Rational> sums(m.order() + 1);
    sums[0] = Rational(1);
    for_each_subset(m.order(), [&](const IndexSet& s) {
        sums[s.size()] += det_exact(principal_submatrix(m, s));
        return true;
    });
    return sums;
}

std::optional<Vector> solve(const MatrixQ& m, const Vector& b)
{
    const std::size_t n = m.order();
    if (b.size() != n) {
        throw InvalidArgument("right-hand side length does not match matrix order");
    }
    MatrixQ a = m;
    Vector rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
            }
            std::swap(rhs[k], rhs[p]);
        }
        const Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) {
                continue;
            }
            const Rational f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
            rhs[i] -= f * rhs[k];
        }
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= a(i, j) * x[j];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

std::vector<Vector> nullspace(const MatrixQ& m)
{
    const std::size_t n = m.order();
    MatrixQ a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a(p, col).is_zero()) {
            ++p;
        }
        if (p == n) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(row, j), a(p, j));
        }
        const Rational inv = a(row, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(row, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a(i, col).is_zero()) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(row, j);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        Vector v(n);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -a(r, free);
        }
        const Integer l = common_denominator(v);
        for (auto& e : v) {
            e *= Rational(l);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace shuhan
