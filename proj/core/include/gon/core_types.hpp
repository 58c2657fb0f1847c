#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gon/linalg.hpp"
#include "gon/rational.hpp"

namespace gon {

// A rational symmetric positive-definite form Q; <x, y> = x^T Q y.
// Every "sphere" of the library is a ball of such a form.
class InnerProductSpace {
 public:
  // Throws InvalidInput unless `form` is square, symmetric and PD.
  explicit InnerProductSpace(QMatrix form);
  static InnerProductSpace euclidean(std::size_t dim);

  std::size_t dim() const { return form_->rows(); }
  const QMatrix& form() const { return *form_; }
  Rational inner(const QVector& x, const QVector& y) const;

  bool operator==(const InnerProductSpace& other) const { return form() == other.form(); }

 private:
  std::shared_ptr<const QMatrix> form_;
};

// Full-rank lattice; basis columns are b_1..b_d in ambient coordinates.
class Lattice {
 public:
  // Throws InvalidInput unless `basis` is square and nonsingular.
  explicit Lattice(QMatrix basis);
  static Lattice integer(std::size_t dim);

  std::size_t dim() const { return data_->basis.rows(); }
  const QMatrix& basis() const { return data_->basis; }
  // |det(basis)|.
  const Rational& covolume() const { return data_->covolume; }

  // B^{-1} x: coordinates of an ambient point w.r.t. the basis.
  QVector to_coefficients(const QVector& ambient) const;
  QVector to_ambient(const QVector& coefficients) const;
  QVector to_ambient(const ZVector& coefficients) const;

  bool operator==(const Lattice& other) const { return basis() == other.basis(); }

 private:
  struct Data {
    QMatrix basis;
    QMatrix inverse;
    Rational covolume;
  };
  std::shared_ptr<const Data> data_;
};

// {x : (x - center)^T Q (x - center) <= radius_sq}. radius_sq == 0 is a point.
class Ball {
 public:
  Ball(InnerProductSpace space, QVector center, Rational radius_sq);

  const InnerProductSpace& space() const { return space_; }
  const QVector& center() const { return center_; }
  const Rational& radius_sq() const { return radius_sq_; }
  std::size_t dim() const { return center_.size(); }

  bool operator==(const Ball& other) const = default;

 private:
  InnerProductSpace space_;
  QVector center_;
  Rational radius_sq_;
};

// Ordered lattice basis e^1..e^d (integer coefficient columns w.r.t.
// lattice.basis()) whose prefix spans agree with those of the witnesses.
class FlagBasis {
 public:
  // Validates unimodularity of `e` and lin(a^1..a^i) = lin(e^1..e^i) for all i.
  FlagBasis(Lattice lattice, ZMatrix e, std::vector<ZVector> witnesses);

  const Lattice& lattice() const { return lattice_; }
  const ZMatrix& coefficients() const { return e_; }
  ZVector vector(std::size_t i) const { return e_.column(i); }
  const std::vector<ZVector>& witnesses() const { return witnesses_; }
  std::size_t dim() const { return e_.rows(); }

 private:
  Lattice lattice_;
  ZMatrix e_;
  std::vector<ZVector> witnesses_;
};

// G = B^T Q B, so G[i][j] = <b_i, b_j>_Q.
QMatrix gram(const Lattice& lattice, const InnerProductSpace& space);
Rational norm_sq(const InnerProductSpace& space, const QVector& x);
bool contains(const Ball& ball, const QVector& x);
// DB = B - B, the origin-centred ball of doubled radius.
Ball difference_body(const Ball& ball);
// (1/2) DB: origin-centred, same radius.
Ball half_difference_body(const Ball& ball);

// The ball expressed in lattice coefficients: z in Z^d lies in the ball iff
// (z - center)^T gram (z - center) <= radius_sq.
struct CoefficientBall {
  QMatrix gram;
  QVector center;
  Rational radius_sq;
};

CoefficientBall to_coefficients(const Lattice& lattice, const Ball& ball);

}  // namespace gon
