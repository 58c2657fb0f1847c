#pragma once

#include <vector>

#include "gon/core_types.hpp"
#include "gon/enumeration.hpp"

namespace gon {

// q_1 >= ... >= q_d, each floor(2/lambda_i + 1) >= 1.
struct QValues {
  std::vector<Integer> q;

  Integer product() const;
};

// 1 + max{k >= 0 : k^2 lambda^2 <= 4}; +infinity maps to 1.
// Throws InvalidInput for lambda_sq <= 0.
Integer q_from_lambda_sq(const LambdaSq& lambda_sq);
QValues q_values(const MinimaProfile& body_minima);

// Minima of a ball of the given radius_sq: the half difference body is the
// origin ball of the same radius, so lambda_i^2 = mu_i^2 / radius_sq where
// mu_i^2 are the lattice minima of the form. Infinite when radius_sq == 0.
MinimaProfile body_minima(const MinimaProfile& lattice_minima, const Rational& radius_sq);

struct BhwReport {
  Integer count;
  MinimaProfile minima;  // body minima
  QValues q;
  Integer bound;                // prod q_i
  Integer first_theorem_bound;  // q_1^d
  bool holds = false;
  bool holds_first = false;
};

// Counts |ball ∩ Λ| and evaluates both bounds. A report with holds == false
// is a verification failure; callers decide how to surface it.
BhwReport verify_theorem1(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball);
bool verify_first_theorem(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball);

struct MinkowskiTerms {
  double volume_ratio;  // vol(E) / det(Λ)
  double bound;         // prod 2 / lambda_i
};

// Floating-point evaluation; throws InvalidInput for radius_sq == 0.
MinkowskiTerms minkowski_second_terms(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball);
bool check_minkowski_second(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball,
                            double rel_tol = 1e-9);

}  // namespace gon
