#include "gon/enumeration.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gon/error.hpp"
#include "gon/reduction.hpp"

namespace gon {

LdltDecomposition ldlt(const QMatrix& gram) {
  if (!gram.square() || gram.rows() == 0) throw InvalidInput("Gram matrix must be non-empty and square");
  if (!is_symmetric(gram)) throw InvalidInput("Gram matrix is not symmetric");
  const std::size_t n = gram.rows();
  LdltDecomposition out{QVector(n), QMatrix::identity(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = gram(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= out.l(i, k) * out.l(i, k) * out.d[k];
    if (di <= 0) throw InvalidInput("Gram matrix is not positive definite");
    out.d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = gram(j, i);
      for (std::size_t k = 0; k < i; ++k) s -= out.l(j, k) * out.l(i, k) * out.d[k];
      out.l(j, i) = s / di;
    }
  }
  return out;
}

Enumerator::Enumerator(QMatrix gram) : gram_(std::move(gram)) {
  ldlt(gram_);  // validates PD
  LllResult lll = lll_reduce(gram_);
  to_original_ = lll.transform.matrix();
  to_reduced_ = unimodular_inverse(to_original_);
  reduced_ = ldlt(lll.gram);
  min_reduced_diagonal_ = lll.gram(0, 0);
  for (std::size_t i = 1; i < lll.gram.rows(); ++i)
    if (lll.gram(i, i) < min_reduced_diagonal_) min_reduced_diagonal_ = lll.gram(i, i);
}

namespace {

struct Search {
  const LdltDecomposition& ldl;
  const ZMatrix& to_original;
  const QVector& center;  // in reduced coordinates
  const Enumerator::Visitor& visit;
  const Rational& radius_sq;
  ZVector w;
  QVector offset;  // w_j - center_j for fixed coordinates

  void run(std::size_t level_plus_one, const Rational& remaining) {
    if (level_plus_one == 0) {
      visit(multiply(to_original, w), radius_sq - remaining);
      return;
    }
    const std::size_t i = level_plus_one - 1;
    const std::size_t n = w.size();
    Rational c = center[i];
    for (std::size_t j = i + 1; j < n; ++j) c -= ldl.l(j, i) * offset[j];
    const Rational bound = remaining / ldl.d[i];
    const IntRange range = integer_range(c, bound);
    for (Integer z = range.lo; z <= range.hi; ++z) {
      const Rational diff = Rational(z) - c;
      const Rational next = remaining - ldl.d[i] * diff * diff;
      w[i] = z;
      offset[i] = Rational(z) - center[i];
      run(i, next);
    }
  }
};

}  // namespace

void Enumerator::for_each(const QVector& center, const Rational& radius_sq, const Visitor& visit) const {
  if (center.size() != dim()) throw InvalidInput("dimension mismatch: enumeration center");
  if (radius_sq < 0) return;
  const QVector reduced_center = multiply(to_reduced_, center);
  Search search{reduced_, to_original_, reduced_center, visit, radius_sq, ZVector(dim()), QVector(dim())};
  search.run(dim(), radius_sq);
}

std::vector<ZVector> Enumerator::points(const QVector& center, const Rational& radius_sq) const {
  std::vector<ZVector> out;
  for_each(center, radius_sq, [&](const ZVector& z, const Rational&) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

Integer Enumerator::count(const QVector& center, const Rational& radius_sq) const {
  Integer n = 0;
  for_each(center, radius_sq, [&](const ZVector&, const Rational&) { ++n; });
  return n;
}

ClosestVectors Enumerator::closest(const QVector& target) const {
  if (target.size() != dim()) throw InvalidInput("dimension mismatch: CVP target");
  // Nearest-plane rounding gives a lattice point and so an upper bound.
  const QVector t = multiply(to_reduced_, target);
  const std::size_t n = dim();
  ZVector w(n);
  QVector offset(n);
  Rational bound = 0;
  for (std::size_t k = n; k-- > 0;) {
    Rational c = t[k];
    for (std::size_t j = k + 1; j < n; ++j) c -= reduced_.l(j, k) * offset[j];
    w[k] = round_nearest(c);
    const Rational diff = Rational(w[k]) - c;
    bound += reduced_.d[k] * diff * diff;
    offset[k] = Rational(w[k]) - t[k];
  }
  ClosestVectors out{bound, {}};
  for_each(target, bound, [&](const ZVector& z, const Rational& dist) {
    if (dist < out.dist_sq) {
      out.dist_sq = dist;
      out.minimizers.clear();
    }
    if (dist == out.dist_sq) out.minimizers.push_back(z);
  });
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

namespace {

bool leading_positive(const ZVector& z) {
  for (const auto& x : z) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

MinimaProfile Enumerator::minima() const {
  const std::size_t n = dim();
  const QVector origin(n);
  Rational radius_sq = min_reduced_diagonal_;
  for (;;) {
    std::vector<std::pair<Rational, ZVector>> candidates;
    for_each(origin, radius_sq, [&](const ZVector& z, const Rational& norm) {
      if (leading_positive(z)) candidates.emplace_back(norm, z);
    });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return b.second < a.second;
    });
    RankTracker tracker(n);
    MinimaProfile profile;
    for (const auto& [norm, z] : candidates) {
      if (tracker.add(z)) {
        profile.lambda_sq.push_back(LambdaSq::finite(norm));
        profile.witnesses.push_back(z);
        if (tracker.rank() == n) return profile;
      }
    }
    radius_sq *= 2;
  }
}

std::vector<ZVector> enumerate_ball(const QMatrix& gram, const QVector& center, const Rational& radius_sq) {
  return Enumerator(gram).points(center, radius_sq);
}

Integer count_ball(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball) {
  if (!(ball.space() == space)) throw InvalidInput("ball lives in a different inner product space");
  const CoefficientBall cb = to_coefficients(lattice, ball);
  return Enumerator(cb.gram).count(cb.center, cb.radius_sq);
}

ClosestVectors closest_vectors(const QMatrix& gram, const QVector& target) {
  return Enumerator(gram).closest(target);
}

MinimaProfile successive_minima(const QMatrix& gram) { return Enumerator(gram).minima(); }

namespace {

std::vector<IntRange> oracle_box(const QMatrix& gram, const QVector& center, const Rational& radius_sq) {
  if (!is_positive_definite(gram)) throw InvalidInput("Gram matrix is not positive definite");
  if (center.size() != gram.rows()) throw InvalidInput("dimension mismatch: oracle center");
  const QMatrix inv = inverse(gram);
  std::vector<IntRange> box;
  for (std::size_t i = 0; i < gram.rows(); ++i) box.push_back(integer_range(center[i], radius_sq * inv(i, i)));
  return box;
}

}  // namespace

Integer oracle_box_size(const QMatrix& gram, const QVector& center, const Rational& radius_sq) {
  if (radius_sq < 0) return 0;
  Integer size = 1;
  for (const auto& r : oracle_box(gram, center, radius_sq)) size *= r.size();
  return size;
}

Integer oracle_count(const QMatrix& gram, const QVector& center, const Rational& radius_sq,
                     std::uint64_t capacity) {
  if (radius_sq < 0) return 0;
  const std::vector<IntRange> box = oracle_box(gram, center, radius_sq);
  Integer size = 1;
  for (const auto& r : box) size *= r.size();
  if (size > Integer(std::to_string(capacity))) {
    throw CapacityError("oracle box holds " + to_string(size) + " candidates, capacity is " +
                        std::to_string(capacity));
  }
  if (size == 0) return 0;
  const std::size_t n = box.size();
  ZVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = box[i].lo;
  Integer count = 0;
  for (;;) {
    QVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = Rational(z[i]) - center[i];
    if (quadratic(gram, diff) <= radius_sq) ++count;
    std::size_t k = 0;
    while (k < n) {
      if (z[k] < box[k].hi) {
        ++z[k];
        break;
      }
      z[k] = box[k].lo;
      ++k;
    }
    if (k == n) break;
  }
  return count;
}

}  // namespace gon
