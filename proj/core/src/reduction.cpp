#include "gon/reduction.hpp"

#include <algorithm>
#include <utility>

#include "gon/enumeration.hpp"
#include "gon/error.hpp"

namespace gon {

UnimodularTransform::UnimodularTransform(ZMatrix u) : u_(std::move(u)) {
  if (!u_.square()) throw InvalidInput("unimodular transform must be square");
  const Integer det = determinant(u_);
  if (det != 1 && det != -1) throw InvalidInput("transform is not unimodular");
}

namespace {

const Rational& delta() {
  static const Rational value(kLllDeltaNumerator, kLllDeltaDenominator);
  return value;
}

// b_k <- b_k - r b_j applied to both the Gram matrix and the transform.
void subtract_multiple(QMatrix& g, ZMatrix& u, std::size_t k, std::size_t j, const Integer& r) {
  const std::size_t n = g.rows();
  const Rational rq(r);
  for (std::size_t c = 0; c < n; ++c) g(k, c) -= rq * g(j, c);
  for (std::size_t c = 0; c < n; ++c) g(c, k) -= rq * g(c, j);
  for (std::size_t c = 0; c < n; ++c) u(c, k) -= r * u(c, j);
}

void swap_vectors(QMatrix& g, ZMatrix& u, std::size_t a, std::size_t b) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(g(a, c), g(b, c));
  for (std::size_t c = 0; c < n; ++c) std::swap(g(c, a), g(c, b));
  for (std::size_t c = 0; c < n; ++c) std::swap(u(c, a), u(c, b));
}

}  // namespace

LllResult lll_reduce(const QMatrix& gram) {
  ldlt(gram);  // validates PD
  const std::size_t n = gram.rows();
  QMatrix g = gram;
  ZMatrix u = ZMatrix::identity(n);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const LdltDecomposition gso = ldlt(g);
      const Integer r = round_nearest(gso.l(k, j));
      if (r != 0) subtract_multiple(g, u, k, j, r);
    }
    const LdltDecomposition gso = ldlt(g);
    const Rational mu = gso.l(k, k - 1);
    if (gso.d[k] >= (delta() - mu * mu) * gso.d[k - 1]) {
      ++k;
    } else {
      swap_vectors(g, u, k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {UnimodularTransform(std::move(u)), std::move(g)};
}

bool is_lll_reduced(const QMatrix& gram) {
  const LdltDecomposition gso = ldlt(gram);
  const std::size_t n = gram.rows();
  const Rational half(1, 2);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gso.l(i, j)) > half) return false;
    const Rational mu = gso.l(i, i - 1);
    if (gso.d[i] < (delta() - mu * mu) * gso.d[i - 1]) return false;
  }
  return true;
}

namespace {

void column_combine(ZMatrix& h, ZMatrix& v, std::size_t j, std::size_t k, std::size_t row) {
  // Replace columns j, k by unimodular combinations so that h(row, k) == 0.
  const Integer a = h(row, j);
  const Integer b = h(row, k);
  if (b == 0) return;
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer a_g = a / g;
  const Integer b_g = b / g;
  auto apply = [&](ZMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Integer cj = m(r, j);
      const Integer ck = m(r, k);
      m(r, j) = x * cj + y * ck;
      m(r, k) = -b_g * cj + a_g * ck;
    }
  };
  apply(h);
  apply(v);
}

}  // namespace

HnfResult hnf(const ZMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0 || m < n) throw InvalidInput("HNF input must have full column rank");
  ZMatrix h = a;
  ZMatrix v = ZMatrix::identity(n);
  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    for (std::size_t k = col + 1; k < n; ++k) column_combine(h, v, col, k, row);
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t r = 0; r < m; ++r) h(r, col) = -h(r, col);
      for (std::size_t r = 0; r < n; ++r) v(r, col) = -v(r, col);
    }
    const Integer pivot = h(row, col);
    for (std::size_t c = 0; c < col; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, c).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r < m; ++r) h(r, c) -= q * h(r, col);
      for (std::size_t r = 0; r < n; ++r) v(r, c) -= q * v(r, col);
    }
    ++col;
  }
  if (col < n) throw InvalidInput("HNF input is rank deficient");
  return {std::move(h), UnimodularTransform(std::move(v))};
}

FlagBasis extend_to_flag_basis(const Lattice& lattice, const std::vector<ZVector>& witnesses) {
  const std::size_t d = lattice.dim();
  if (witnesses.size() != d) throw InvalidInput("extend_to_flag_basis needs exactly d witnesses");
  for (const auto& w : witnesses)
    if (w.size() != d) throw InvalidInput("dimension mismatch: witness");
  if (rank(witnesses) != d) throw InvalidInput("witnesses are linearly dependent");
  const ZMatrix a = ZMatrix::from_columns(witnesses);
  // A^T V = H (lower) => V^T A = H^T (upper); E = (V^T)^{-1}.
  const HnfResult r = hnf(transpose(a));
  ZMatrix e = unimodular_inverse(transpose(r.v.matrix()));
  return FlagBasis(lattice, std::move(e), witnesses);
}

std::pair<InnerProductSpace, Ball> ellipsoid_to_ball_form(const EllipsoidData& ellipsoid) {
  InnerProductSpace space(ellipsoid.form);
  Ball ball(space, ellipsoid.center, Rational(1));
  return {std::move(space), std::move(ball)};
}

}  // namespace gon
