#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oscform/rational_function.hpp"

namespace oscform {

/// Dense row-major matrix. T is Rational or RationalFunction for field
/// matrices, Integer or Polynomial for the fraction-free kernels.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  void swap_rows(std::size_t a, std::size_t b);
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);

/// Result of fraction-free Gauss-Jordan over an integral domain. The first
/// `rank` rows of `reduced` divided by `denominator` are the reduced row
/// echelon form; every pivot entry equals `denominator`.
template <class R>
struct FractionFreeForm {
  Matrix<R> reduced;
  R denominator;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Bareiss-style Gauss-Jordan with exact divisions; first nonzero entry in
/// each column is the pivot.
template <class R>
FractionFreeForm<R> fraction_free_rref(Matrix<R> a);

template <class F>
struct RowEchelon {
  Matrix<F> reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q or Q(u).
template <class F>
RowEchelon<F> rref(const Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Linear subspace of F^n stored as its canonical RREF basis, so equal
/// subspaces have identical bases.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<std::vector<F>>& vectors, std::size_t ambient);
  static Subspace row_space(const Matrix<F>& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<F> vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<F>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0} as a canonical subspace.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m);

/// A basis of the right kernel with entries free of denominators: integers
/// scaled to coprime entries over Q, polynomials over Q(u). One vector per
/// non-pivot column.
template <class F>
std::vector<std::vector<F>> kernel_vectors(const Matrix<F>& m);

template <class F>
Subspace<F> row_space(const Matrix<F>& m) {
  return Subspace<F>::row_space(m);
}

/// True iff every basis vector of b lies in a. Ambient dimensions must agree.
template <class F>
bool span_contains(const Subspace<F>& a, const Subspace<F>& b);

/// Inverse of a square rational matrix, or nullopt when singular.
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m);

Matrix<Rational> evaluate(const Matrix<RationalFunction>& m, std::span<const Rational> point);

/// Clears denominators and removes the content of a vector: the result
/// spans the same line and has coprime integer (or polynomial) entries.
std::vector<Rational> primitive_vector(const std::vector<Rational>& v);
std::vector<RationalFunction> primitive_vector(const std::vector<RationalFunction>& v);

}  // namespace oscform
