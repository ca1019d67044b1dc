#include "shuhan/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "shuhan/errors.hpp"

namespace shuhan {

MatrixQ::MatrixQ(std::size_t order) : order_(order), entries_(order * order) {}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows)
    : order_(rows.size()), entries_()
{
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
        if (row.size() != order_) {
            throw InvalidArgument("matrix rows must all have length equal to the row count");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t order)
{
    return diagonal(order, Rational(1));
}

MatrixQ MatrixQ::diagonal(std::size_t order, const Rational& value)
{
    MatrixQ m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m(i, i) = value;
    }
    return m;
}

bool MatrixQ::is_symmetric() const
{
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool MatrixQ::is_integral() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_integer(); });
}

MatrixQ MatrixQ::transpose() const
{
    MatrixQ t(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o)
{
    if (o.order_ != order_) {
        throw InvalidArgument("matrix order mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += o.entries_[k];
    }
    return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o)
{
    if (o.order_ != order_) {
        throw InvalidArgument("matrix order mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= o.entries_[k];
    }
    return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& s)
{
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b)
{
    if (a.order_ != b.order_) {
        throw InvalidArgument("matrix order mismatch");
    }
    const std::size_t n = a.order_;
    MatrixQ c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

Vector operator*(const MatrixQ& a, const Vector& x)
{
    if (x.size() != a.order_) {
        throw InvalidArgument("vector length does not match matrix order");
    }
    Vector y(a.order_);
    for (std::size_t i = 0; i < a.order_; ++i) {
        for (std::size_t j = 0; j < a.order_; ++j) {
            y[i] += a(i, j) * x[j];
        }
    }
    return y;
}

MatrixQ MatrixQ::shifted(const Rational& value) const
{
    MatrixQ m = *this;
    for (std::size_t i = 0; i < order_; ++i) {
        m(i, i) += value;
    }
    return m;
}

std::string MatrixQ::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < order_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < order_; ++j) {
            os << (j ? ", " : "") << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw InvalidArgument("permutation is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        image[i] = i;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j)
{
    auto image = identity(n).image();
    std::swap(image.at(i), image.at(j));
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[image_[i]] = i;
    }
    return Permutation(std::move(inv));
}

MatrixQ symmetrize(const MatrixQ& m)
{
    MatrixQ s = m + m.transpose();
    return s *= Rational(Integer(1), Integer(2));
}

void check_index_set(std::size_t n, const IndexSet& indices)
{
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= n) {
            throw InvalidArgument("index " + std::to_string(indices[k]) + " out of range for order "
                                  + std::to_string(n));
        }
        if (k > 0 && indices[k] <= indices[k - 1]) {
            throw InvalidArgument("index set must be strictly ascending");
        }
    }
}

MatrixQ principal_submatrix(const MatrixQ& m, const IndexSet& indices)
{
    if (indices.empty()) {
        throw InvalidArgument("principal submatrix needs a nonempty index set");
    }
    check_index_set(m.order(), indices);
    MatrixQ sub(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            sub(i, j) = m(indices[i], indices[j]);
        }
    }
    return sub;
}

MatrixQ permute(const MatrixQ& m, const Permutation& sigma)
{
    if (sigma.size() != m.order()) {
        throw InvalidArgument("permutation size does not match matrix order");
    }
    MatrixQ p(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            p(i, j) = m(sigma(i), sigma(j));
        }
    }
    return p;
}

Rational quadratic_form(const MatrixQ& m, std::span<const Rational> x)
{
    if (x.size() != m.order()) {
        throw InvalidArgument("vector length does not match matrix order");
    }
    Rational total;
    for (std::size_t i = 0; i < m.order(); ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        Rational row;
        for (std::size_t j = 0; j < m.order(); ++j) {
            row += m(i, j) * x[j];
        }
        total += x[i] * row;
    }
    return total;
}

IndexSet complement(std::size_t n, const IndexSet& removed)
{
    check_index_set(n, removed);
    IndexSet kept;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (r < removed.size() && removed[r] == i) {
            ++r;
        } else {
            kept.push_back(i);
        }
    }
    return kept;
}

} // namespace shuhan
