#include "gon/linalg.hpp"

#include <utility>

#include "gon/error.hpp"

namespace gon {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

// Row-reduces a copy of m; returns (rank, determinant) where the determinant
// is meaningful only for square input.
std::pair<std::size_t, Rational> eliminate(QMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));
      det = -det;
    }
    const Rational p = m(rank, c);
    det *= p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / p;
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  if (rank < cols) det = 0;
  return {rank, det};
}

}  // namespace

QMatrix to_rational(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      require(is_integer(m(r, c)), "matrix entry is not an integer");
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

ZVector to_integer(const QVector& v) {
  ZVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    require(is_integer(x), "vector entry is not an integer");
    out.push_back(x.get_num());
  }
  return out;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

ZMatrix transpose(const ZMatrix& m) {
  ZMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  require(a.cols() == b.rows(), "dimension mismatch in matrix product");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
  require(a.cols() == b.rows(), "dimension mismatch in matrix product");
  ZMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

QVector multiply(const QMatrix& a, const QVector& x) {
  require(a.cols() == x.size(), "dimension mismatch in matrix-vector product");
  QVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

QVector multiply(const ZMatrix& a, const QVector& x) {
  require(a.cols() == x.size(), "dimension mismatch in matrix-vector product");
  QVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += Rational(a(r, c)) * x[c];
  return out;
}

ZVector multiply(const ZMatrix& a, const ZVector& x) {
  require(a.cols() == x.size(), "dimension mismatch in matrix-vector product");
  ZVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

Rational bilinear(const QMatrix& a, const QVector& x, const QVector& y) {
  require(a.rows() == x.size() && a.cols() == y.size(), "dimension mismatch in bilinear form");
  Rational total = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (x[r] == 0) continue;
    Rational row = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) row += a(r, c) * y[c];
    total += x[r] * row;
  }
  return total;
}

Rational quadratic(const QMatrix& a, const QVector& x) { return bilinear(a, x, x); }

Rational dot(const QVector& x, const QVector& y) {
  require(x.size() == y.size(), "dimension mismatch in dot product");
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  return total;
}

QVector add(const QVector& x, const QVector& y) {
  require(x.size() == y.size(), "dimension mismatch in vector sum");
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

QVector subtract(const QVector& x, const QVector& y) {
  require(x.size() == y.size(), "dimension mismatch in vector difference");
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

QVector scale_vector(const QVector& x, const Rational& s) {
  QVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * s;
  return out;
}

ZVector negate(const ZVector& x) {
  ZVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return out;
}

Rational determinant(const QMatrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  return eliminate(m).second;
}

Integer determinant(const ZMatrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

QMatrix inverse(const QMatrix& m) {
  require(m.square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    require(pivot < n, "singular matrix");
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const Rational p = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

ZMatrix unimodular_inverse(const ZMatrix& m) {
  const Integer det = determinant(m);
  require(det == 1 || det == -1, "matrix is not unimodular");
  return to_integer(inverse(to_rational(m)));
}

std::size_t rank(const QMatrix& m) { return eliminate(m).first; }

std::size_t rank(const std::vector<ZVector>& vectors) {
  if (vectors.empty()) return 0;
  RankTracker tracker(vectors.front().size());
  for (const auto& v : vectors) tracker.add(v);
  return tracker.rank();
}

bool is_symmetric(const QMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

bool is_positive_definite(const QMatrix& m) {
  if (!is_symmetric(m)) return false;
  // Symmetric elimination without pivoting; the k-th pivot is the ratio of
  // consecutive leading minors, so all pivots > 0 iff all minors > 0.
  const std::size_t n = m.rows();
  QMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

QMatrix leading_block(const QMatrix& m, std::size_t k) {
  QMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
  return out;
}

QVector RankTracker::reduce(const ZVector& v) const {
  require(v.size() == dim_, "dimension mismatch in rank test");
  QVector x = to_rational(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (x[p] == 0) continue;
    const Rational f = x[p] / rows_[k][p];
    for (std::size_t c = 0; c < dim_; ++c) x[c] -= f * rows_[k][c];
  }
  return x;
}

bool RankTracker::independent(const ZVector& v) const {
  const QVector x = reduce(v);
  for (const auto& e : x)
    if (e != 0) return true;
  return false;
}

bool RankTracker::add(const ZVector& v) {
  const QVector x = reduce(v);
  for (std::size_t c = 0; c < dim_; ++c) {
    if (x[c] != 0) {
      rows_.push_back(x);
      pivots_.push_back(c);
      return true;
    }
  }
  return false;
}

}  // namespace gon
