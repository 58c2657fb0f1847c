#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gon/rational.hpp"

namespace gon {

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

// Dense row-major matrix. Values are treated as immutable once built; the
// mutable accessor exists for construction inside algorithms.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<std::vector<T>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const;
  std::vector<T> row(std::size_t r) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (const auto& v : row) data_.push_back(v);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns) {
  const std::size_t cols = columns.size();
  const std::size_t rows = cols == 0 ? 0 : columns.front().size();
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t c) const {
  std::vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix to_rational(const ZMatrix& m);
QVector to_rational(const ZVector& v);
// Throws InvalidInput if some entry is not an integer.
ZMatrix to_integer(const QMatrix& m);
ZVector to_integer(const QVector& v);

QMatrix transpose(const QMatrix& m);
ZMatrix transpose(const ZMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
ZMatrix multiply(const ZMatrix& a, const ZMatrix& b);
QVector multiply(const QMatrix& a, const QVector& x);
QVector multiply(const ZMatrix& a, const QVector& x);
ZVector multiply(const ZMatrix& a, const ZVector& x);

// x^T A y.
Rational bilinear(const QMatrix& a, const QVector& x, const QVector& y);
Rational quadratic(const QMatrix& a, const QVector& x);
Rational dot(const QVector& x, const QVector& y);

QVector add(const QVector& x, const QVector& y);
QVector subtract(const QVector& x, const QVector& y);
QVector scale_vector(const QVector& x, const Rational& s);
ZVector negate(const ZVector& x);

Rational determinant(const QMatrix& m);
Integer determinant(const ZMatrix& m);
// Throws InvalidInput on a singular matrix.
QMatrix inverse(const QMatrix& m);
// Inverse of a unimodular integer matrix; throws InvalidInput otherwise.
ZMatrix unimodular_inverse(const ZMatrix& m);
std::size_t rank(const QMatrix& m);
std::size_t rank(const std::vector<ZVector>& vectors);

bool is_symmetric(const QMatrix& m);
// Leading principal minors all positive (Sylvester's criterion).
bool is_positive_definite(const QMatrix& m);

// Leading k x k block.
QMatrix leading_block(const QMatrix& m, std::size_t k);

// Incremental independence test over Q for integer vectors of one length.
class RankTracker {
 public:
  explicit RankTracker(std::size_t dim) : dim_(dim) {}
  // Returns true and records v if it is independent of the recorded vectors.
  bool add(const ZVector& v);
  bool independent(const ZVector& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  QVector reduce(const ZVector& v) const;

  std::size_t dim_;
  std::vector<QVector> rows_;  // echelon rows
  std::vector<std::size_t> pivots_;
};

}  // namespace gon
