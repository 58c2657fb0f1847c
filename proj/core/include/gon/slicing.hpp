#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gon/bhw.hpp"
#include "gon/core_types.hpp"
#include "gon/enumeration.hpp"
#include "gon/translation.hpp"

namespace gon {

// Intersection of a ball with the hyperplane y_d = height (flag coordinates),
// projected along e_d onto the span of e^1..e^{d-1}.
struct Slice {
  std::size_t parent = 0;
  Integer height;
  QVector center;      // d-1 flag coordinates
  Rational radius_sq;  // negative when the hyperplane misses the ball

  bool empty() const { return radius_sq < 0; }
};

// Splits G = [[G11, g], [g^T, g_dd]]; the slice at height m of a ball
// (t, R) is the (d-1)-ball centred at t' - h G11^{-1} g with radius^2
// R - h^2 (g_dd - g^T G11^{-1} g), where h = m - t_d.
class Slicer {
 public:
  // Throws InvalidInput for d < 2 or a non-PD Gram matrix.
  explicit Slicer(const QMatrix& gram);

  const QMatrix& sub_gram() const { return sub_gram_; }
  const Rational& schur_complement() const { return schur_; }

  Slice slice(const Sphere& ball, const Integer& height, std::size_t parent = 0) const;
  // Heights with a nonempty slice.
  IntRange heights(const Sphere& ball) const;

 private:
  QMatrix sub_gram_;
  QVector offset_;  // G11^{-1} g
  Rational schur_;
};

Slice slice_ball(const QMatrix& gram, const Sphere& ball, const Integer& height);

struct C1Violation {
  std::size_t ball = 0;   // 0-based
  std::size_t index = 0;  // i, 1-based as in q_i
  ZVector lattice_vector;
};

struct C1Result {
  bool holds = true;
  std::optional<C1Violation> violation;
};

struct C2Violation {
  std::size_t first = 0;
  std::size_t second = 0;
  Rational dist_sq;
};

struct C2Result {
  bool holds = true;
  std::optional<C2Violation> violation;
};

// (C1): DS_j ∩ q_i (Λ \ Λ^{i-1}) = ∅ for all j and 1 <= i <= d, where Λ^{i-1}
// is spanned by the first i-1 coordinates. q must hold at least d entries.
C1Result check_c1(const Enumerator& form, const std::vector<Sphere>& balls, const std::vector<Integer>& q);
// (C2): (S_j - S_k) ∩ scale Λ = ∅ for all j != k.
C2Result check_c2(const Enumerator& form, const std::vector<Sphere>& balls, const Integer& scale);

// Balls of a common inner product over a lattice with a flag basis and
// integers q_1 >= ... >= q_d >= q_{d+1} >= 1.
class StrongInstance {
 public:
  StrongInstance(Lattice lattice, InnerProductSpace space, std::vector<Ball> balls, FlagBasis flag,
                 std::vector<Integer> q);

  const Lattice& lattice() const { return lattice_; }
  const InnerProductSpace& space() const { return space_; }
  const std::vector<Ball>& balls() const { return balls_; }
  const FlagBasis& flag() const { return flag_; }
  const std::vector<Integer>& q() const { return q_; }
  std::size_t dim() const { return lattice_.dim(); }

  // Gram matrix and ball centres in flag coordinates.
  QMatrix flag_gram() const;
  std::vector<Sphere> flag_spheres() const;

 private:
  Lattice lattice_;
  InnerProductSpace space_;
  std::vector<Ball> balls_;
  FlagBasis flag_;
  std::vector<Integer> q_;
};

C1Result check_c1(const StrongInstance& instance);
C2Result check_c2(const StrongInstance& instance, const Integer& scale);

struct ProofCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LevelTrace;

struct ResidueTrace {
  Integer residue;  // m mod q_d in [0, q_d)
  std::size_t slices = 0;
  Integer sum;
  Integer bound;  // prod_{i<d} q_i
  std::shared_ptr<const LevelTrace> child;
};

struct LevelTrace {
  std::size_t dim = 0;
  std::size_t balls = 0;
  std::vector<Integer> q;
  std::vector<ZVector> shifts;  // u_j - w_j per ball, in q_{d+1} Z^d
  Integer direct_count;
  Integer total;
  Integer bound;  // prod_{i<=d} q_i
  std::vector<ProofCheck> checks;
  std::vector<ResidueTrace> residues;

  bool passed() const;
  std::size_t node_count() const;
  // First failing check on a depth-first walk, if any.
  std::optional<ProofCheck> first_failure() const;
};

struct StrongReport {
  LevelTrace root;
  Integer total;
  Integer bound;
  bool passed = false;
};

// Replays the inductive argument: translation over q_{d+1}Λ, slicing along
// e_d, grouping by residues mod q_d, and recursion. Throws
// HypothesisViolation when the instance fails (C1) or (C2).
StrongReport verify_strong(const StrongInstance& instance);

struct ViaStrongReport {
  BhwReport bhw;
  std::vector<ZVector> flag;  // e^1..e^d as lattice coefficients
  bool c1_holds = false;
  std::optional<StrongReport> strong;
  bool count_matches = false;
  bool passed = false;
};

// The counting bound routed through the replay with n = 1 and q_{d+1} = 1, the flag
// basis built from the minima witnesses.
ViaStrongReport verify_theorem1_via_strong(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball);

}  // namespace gon
