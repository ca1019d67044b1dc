#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "shuhan/rational.hpp"

namespace shuhan {

using Vector = std::vector<Rational>;

/// Indices are 0-based throughout the C++ API; serialized forms use 1-based indices.
using IndexSet = std::vector<std::size_t>;

/// Dense square matrix of exact rationals, row-major.
class MatrixQ {
public:
    MatrixQ() = default;
    explicit MatrixQ(std::size_t order);
    MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

    static MatrixQ identity(std::size_t order);
    static MatrixQ diagonal(std::size_t order, const Rational& value);

    std::size_t order() const { return order_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    std::span<const Rational> entries() const { return entries_; }

    bool is_symmetric() const;
    bool is_integral() const;
    MatrixQ transpose() const;

    MatrixQ& operator+=(const MatrixQ& o);
    MatrixQ& operator-=(const MatrixQ& o);
    MatrixQ& operator*=(const Rational& s);
    friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
    friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
    friend MatrixQ operator*(MatrixQ a, const Rational& s) { return a *= s; }
    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend Vector operator*(const MatrixQ& a, const Vector& x);

    /// Adds `value` to every diagonal entry.
    MatrixQ shifted(const Rational& value) const;

    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

    std::string str() const;

private:
    std::size_t order_ = 0;
    std::vector<Rational> entries_;
};

/// Bijection of {0..n-1}; `image[i]` is sigma(i).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }
    Permutation inverse() const;

private:
    std::vector<std::size_t> image_;
};

/// (m + m^T) / 2.
MatrixQ symmetrize(const MatrixQ& m);

/// Rows and columns at strictly ascending `indices`, original order kept.
MatrixQ principal_submatrix(const MatrixQ& m, const IndexSet& indices);

/// Result(i, j) = m(sigma(i), sigma(j)).
MatrixQ permute(const MatrixQ& m, const Permutation& sigma);

/// x^T m x.
Rational quadratic_form(const MatrixQ& m, std::span<const Rational> x);

/// Complement of `removed` in {0..n-1}, ascending.
IndexSet complement(std::size_t n, const IndexSet& removed);

/// Throws unless `indices` is strictly ascending and inside {0..n-1}.
void check_index_set(std::size_t n, const IndexSet& indices);

} // namespace shuhan
