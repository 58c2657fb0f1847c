#include "gon/core_types.hpp"

#include <string>
#include <utility>

#include "gon/error.hpp"

namespace gon {

namespace {

void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw InvalidInput(std::string("dimension mismatch: ") + what + " has dimension " +
                       std::to_string(actual) + ", expected " + std::to_string(expected));
  }
}

}  // namespace

InnerProductSpace::InnerProductSpace(QMatrix form) {
  if (!form.square() || form.rows() == 0) throw InvalidInput("form must be a non-empty square matrix");
  if (!is_symmetric(form)) throw InvalidInput("form is not symmetric");
  if (!is_positive_definite(form)) throw InvalidInput("form is not positive definite");
  form_ = std::make_shared<const QMatrix>(std::move(form));
}

InnerProductSpace InnerProductSpace::euclidean(std::size_t dim) {
  return InnerProductSpace(QMatrix::identity(dim));
}

Rational InnerProductSpace::inner(const QVector& x, const QVector& y) const {
  require_dim(dim(), x.size(), "vector");
  require_dim(dim(), y.size(), "vector");
  return bilinear(form(), x, y);
}

Lattice::Lattice(QMatrix basis) {
  if (!basis.square() || basis.rows() == 0) throw InvalidInput("basis must be a non-empty square matrix");
  Rational det = determinant(basis);
  if (det == 0) throw InvalidInput("basis is singular");
  QMatrix inv = inverse(basis);
  data_ = std::make_shared<const Data>(Data{std::move(basis), std::move(inv), abs(det)});
}

Lattice Lattice::integer(std::size_t dim) { return Lattice(QMatrix::identity(dim)); }

QVector Lattice::to_coefficients(const QVector& ambient) const {
  require_dim(dim(), ambient.size(), "point");
  return multiply(data_->inverse, ambient);
}

QVector Lattice::to_ambient(const QVector& coefficients) const {
  require_dim(dim(), coefficients.size(), "coefficient vector");
  return multiply(basis(), coefficients);
}

QVector Lattice::to_ambient(const ZVector& coefficients) const {
  return to_ambient(to_rational(coefficients));
}

Ball::Ball(InnerProductSpace space, QVector center, Rational radius_sq)
    : space_(std::move(space)), center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
  require_dim(space_.dim(), center_.size(), "ball center");
  if (radius_sq_ < 0) throw InvalidInput("ball radius_sq is negative");
}

FlagBasis::FlagBasis(Lattice lattice, ZMatrix e, std::vector<ZVector> witnesses)
    : lattice_(std::move(lattice)), e_(std::move(e)), witnesses_(std::move(witnesses)) {
  const std::size_t d = lattice_.dim();
  if (e_.rows() != d || e_.cols() != d) throw InvalidInput("flag basis has wrong shape");
  const Integer det = determinant(e_);
  if (det != 1 && det != -1) throw InvalidInput("flag basis is not unimodular");
  if (witnesses_.size() != d) throw InvalidInput("flag basis needs d witnesses");
  std::vector<ZVector> prefix;
  RankTracker witness_rank(d);
  for (std::size_t i = 0; i < d; ++i) {
    require_dim(d, witnesses_[i].size(), "witness");
    if (!witness_rank.add(witnesses_[i])) throw InvalidInput("flag witnesses are linearly dependent");
    prefix.push_back(witnesses_[i]);
    prefix.push_back(e_.column(i));
    if (rank(prefix) != i + 1) {
      throw InvalidInput("flag basis prefix span differs from witness span at index " +
                         std::to_string(i + 1));
    }
  }
}

QMatrix gram(const Lattice& lattice, const InnerProductSpace& space) {
  require_dim(lattice.dim(), space.dim(), "inner product space");
  const QMatrix& b = lattice.basis();
  return multiply(transpose(b), multiply(space.form(), b));
}

Rational norm_sq(const InnerProductSpace& space, const QVector& x) {
  require_dim(space.dim(), x.size(), "vector");
  return quadratic(space.form(), x);
}

bool contains(const Ball& ball, const QVector& x) {
  require_dim(ball.dim(), x.size(), "point");
  return norm_sq(ball.space(), subtract(x, ball.center())) <= ball.radius_sq();
}

Ball difference_body(const Ball& ball) {
  return Ball(ball.space(), QVector(ball.dim()), 4 * ball.radius_sq());
}

Ball half_difference_body(const Ball& ball) {
  return Ball(ball.space(), QVector(ball.dim()), ball.radius_sq());
}

CoefficientBall to_coefficients(const Lattice& lattice, const Ball& ball) {
  return {gram(lattice, ball.space()), lattice.to_coefficients(ball.center()), ball.radius_sq()};
}

}  // namespace gon
