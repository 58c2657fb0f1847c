#pragma once

#include <cstddef>
#include <vector>

#include "gon/core_types.hpp"
#include "gon/enumeration.hpp"

namespace gon {

// A ball in lattice coefficient coordinates; the lattice is Z^d and the
// geometry is the Gram form of the enumerator it is used with.
struct Sphere {
  QVector center;
  Rational radius_sq;
};

// dist > sqrt(ra_sq) + sqrt(rb_sq), decided exactly without square roots.
bool separated(const Rational& dist_sq, const Rational& ra_sq, const Rational& rb_sq);

// min over y in Z^d of ||x + scale * y||^2 in the form's geometry.
Rational coset_distance_sq(const Enumerator& form, const QVector& x, const Rational& scale = 1);

// <u, l> + ||l||^2 >= 0 for every l in scale * Z^d. Any violator has
// ||l|| < ||u||, so the finitely many l with ||l||^2 <= ||u||^2 decide it.
bool certify_all_t(const Enumerator& form, const QVector& u, const Rational& scale = 1);

struct CoefficientTranslation {
  std::vector<QVector> u;  // translated centers, u[0] == w[0]
  QMatrix d_sq;            // pairwise coset distances^2 before translation
  bool certified_all_t = false;
};

// Keeps the first sphere and moves each other center w_i within
// w_i + scale * Z^d to a point closest to it: u_i = w_i - scale * z* with z*
// the lexicographically smallest closest vector to (w_i - u_1) / scale.
// Throws HypothesisViolation unless every pair is strictly separated.
CoefficientTranslation translate_spheres(const Enumerator& form, const std::vector<Sphere>& spheres,
                                         const Rational& scale = 1);

struct SampleCheck {
  Rational t;
  Rational dt_sq;
  bool at_least_d = false;  // dt_sq >= d_sq
  bool separated = false;   // dt > r_i + r_j
};

struct PairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational d_sq;
  bool certified = false;         // all-t certificate on u_i - u_j
  bool midpoint_minimal = false;  // ||u/2 + l||^2 >= ||u/2||^2 on the finite candidate set
  bool parallelogram = true;      // the identity/inequality chain through u_1 (pairs with i >= 2)
  std::vector<SampleCheck> samples;

  bool passed() const;
};

struct TranslationReport {
  bool first_row_optimal = false;  // ||u_1 - u_j||^2 == d_1j^2 for all j
  std::vector<PairCheck> pairs;

  bool passed() const;
};

TranslationReport verify_translation(const Enumerator& form, const std::vector<Sphere>& spheres,
                                     const CoefficientTranslation& result, const std::vector<Rational>& t_samples,
                                     const Rational& scale = 1);

// Ambient-coordinate front end.
class SpherePack {
 public:
  // Radii are positive rationals; each sphere is Ball(center, radius^2).
  SpherePack(InnerProductSpace space, Lattice lattice, const std::vector<QVector>& centers,
             const std::vector<Rational>& radii);
  // General radii^2, as produced by slicing.
  SpherePack(InnerProductSpace space, Lattice lattice, std::vector<Ball> balls);

  const InnerProductSpace& space() const { return space_; }
  const Lattice& lattice() const { return lattice_; }
  const std::vector<Ball>& spheres() const { return balls_; }
  std::size_t size() const { return balls_.size(); }

  QMatrix gram() const;
  std::vector<Sphere> coefficient_spheres() const;

 private:
  InnerProductSpace space_;
  Lattice lattice_;
  std::vector<Ball> balls_;
};

struct TranslationResult {
  std::vector<QVector> u;  // ambient
  QMatrix d_sq;
  bool certified_all_t = false;
};

Rational coset_distance_sq(const InnerProductSpace& space, const Lattice& lattice, const QVector& x);
bool certify_all_t(const InnerProductSpace& space, const Lattice& lattice, const QVector& u);
TranslationResult translate_spheres(const SpherePack& pack);
TranslationReport verify_translation(const TranslationResult& result, const SpherePack& pack,
                                     const std::vector<Rational>& t_samples);

}  // namespace gon
