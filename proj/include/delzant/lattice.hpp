#pragma once

// Exact integer and rational linear algebra on top of GMP.
//
// Everything here is value-typed and immutable once built; no floating point
// is involved. Elimination is fraction-free (Bareiss) so intermediate entries
// stay bounded by the minors of the input.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delzant/error.hpp"

namespace delzant {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix with explicit shape.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  /// Builds the matrix whose j-th column is columns[j].
  static Matrix from_columns(std::span<const std::vector<T>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const;
  std::vector<T> column(std::size_t c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(std::span<const std::vector<T>> columns) {
  if (columns.empty()) return Matrix();
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw Error(Errc::dimension_mismatch, "columns of unequal length");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

// Vector helpers.

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RationalVector to_rational(std::span<const Integer> v);
RationalMatrix to_rational(const IntMatrix& m);
/// Throws not_integral when any entry has a denominator other than 1.
IntVector to_integer(std::span<const Rational> v);
IntMatrix to_integer(const RationalMatrix& m);

bool is_integral(const Rational& q);
bool is_integral(std::span<const Rational> v);
bool is_primitive(std::span<const Integer> v);
/// Least common multiple of the denominators (1 for an empty or integral vector).
Integer denominator_lcm(std::span<const Rational> v);

std::string to_string(std::span<const Integer> v);

// Core operations.

/// Exact determinant by fraction-free elimination.
Integer det(const IntMatrix& m);
Rational det(const RationalMatrix& m);

/// True iff the n vectors (each of length n) form a basis of the lattice Z^n.
bool is_z_basis(std::span<const IntVector> vectors);

/// Integer inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Solves m x = b exactly. Returns nullopt when m is singular.
std::optional<RationalVector> solve_rational(const RationalMatrix& m, std::span<const Rational> b);

/// Rank of a rational matrix.
std::size_t rank(const RationalMatrix& m);

/// A nonzero vector orthogonal to the n-1 rows of m (generalised cross
/// product); the zero vector when the rows are dependent.
IntVector orthogonal_complement(const IntMatrix& m);

}  // namespace delzant
