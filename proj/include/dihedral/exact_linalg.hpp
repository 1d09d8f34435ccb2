// Exact integer and rational matrix kernels.
//
// Everything here works over arbitrary-precision integers (mpz_class) and
// rationals (mpq_class); there is no floating point anywhere.  Matrices are
// small (at most a few dozen rows) so no effort is made to control
// coefficient swell.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dihedral {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// p/q in lowest terms.
Rational make_rational(long num, long den = 1);

/// Lowest-terms "p/q" rendering; integers are written with denominator 1.
std::string to_fraction_string(const Rational& q);

/// Dense row-major matrix.  Zero-row matrices are legal (a basis of the
/// trivial subspace has no rows) but the column count is always kept.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  template <typename U>
  Matrix(std::initializer_list<std::initializer_list<U>> rows) {
    rows_ = rows.size();
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& x : row) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  const std::vector<T>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Row-style Hermite decomposition U·A = H.
///
/// H is upper echelon with the nonzero rows first; each pivot is positive and
/// the entries above a pivot lie in [0, pivot).  U is unimodular.
struct HermiteDecomposition {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
};

HermiteDecomposition hnf(const IntMatrix& a);

/// True iff v is an integer combination of the rows of a Hermite form.
bool in_row_lattice(const HermiteDecomposition& form, std::span<const Integer> v);

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatVector multiply(const RatMatrix& a, std::span<const Rational> v);
RatMatrix transpose(const RatMatrix& a);
RatMatrix to_rational(const IntMatrix& a);

std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
Integer determinant(const IntMatrix& a);

/// Inverse of a square matrix; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);

/// Basis (as rows) of {x : x·C = 0}.  Has rows(C) − rank(C) rows, each scaled
/// to a primitive integer vector.
RatMatrix left_nullspace(const RatMatrix& c);

/// Least common multiple of the denominators of every entry.
Integer common_denominator(std::span<const Rational> v);

/// Whether v lies in the subgroup of Q^k generated over Z by gens.
///
/// Clears every denominator of v and gens jointly, then decides integer
/// lattice membership through the Hermite form of the generator rows.
bool subgroup_membership(std::span<const Rational> v, std::span<const RatVector> gens);

}  // namespace dihedral
