#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gon/core_types.hpp"
#include "gon/linalg.hpp"
#include "gon/rational.hpp"

namespace gon {

// G = L diag(D) L^T with L unit lower triangular, so that
//   x^T G x = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2.
struct LdltDecomposition {
  QVector d;
  QMatrix l;
};

// Throws InvalidInput when G is not symmetric positive definite.
LdltDecomposition ldlt(const QMatrix& gram);

// A squared minimum that may be +infinity (only for radius-0 bodies).
struct LambdaSq {
  std::optional<Rational> value;

  static LambdaSq infinite() { return {}; }
  static LambdaSq finite(Rational v) { return {std::move(v)}; }
  bool is_infinite() const { return !value.has_value(); }
  bool operator==(const LambdaSq& other) const = default;
};

// lambda_1^2 <= ... <= lambda_d^2 with linearly independent witnesses,
// norm_sq(a^i) == lambda_i^2 for the lattice-level profile.
struct MinimaProfile {
  std::vector<LambdaSq> lambda_sq;
  std::vector<ZVector> witnesses;
};

struct ClosestVectors {
  Rational dist_sq;
  // All minimizers in lexicographic order; front() is the selected one.
  std::vector<ZVector> minimizers;
};

// Fincke-Pohst enumeration over one Gram matrix. Construction LLL-reduces
// the form once; queries report points in the caller's coordinates.
class Enumerator {
 public:
  explicit Enumerator(QMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }

  using Visitor = std::function<void(const ZVector& point, const Rational& dist_sq)>;

  // Calls `visit` for every z with (z - center)^T G (z - center) <= radius_sq,
  // in no particular order. Negative radius_sq visits nothing.
  void for_each(const QVector& center, const Rational& radius_sq, const Visitor& visit) const;
  // Same set, lexicographically sorted.
  std::vector<ZVector> points(const QVector& center, const Rational& radius_sq) const;
  Integer count(const QVector& center, const Rational& radius_sq) const;

  ClosestVectors closest(const QVector& target) const;
  // Lattice successive minima of the form itself.
  MinimaProfile minima() const;

 private:
  QMatrix gram_;
  ZMatrix to_original_;    // U: z = U w
  ZMatrix to_reduced_;     // U^{-1}
  LdltDecomposition reduced_;
  Rational min_reduced_diagonal_;
};

std::vector<ZVector> enumerate_ball(const QMatrix& gram, const QVector& center, const Rational& radius_sq);
Integer count_ball(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball);
ClosestVectors closest_vectors(const QMatrix& gram, const QVector& target);

// Greedy selection over all vectors sorted by norm, doubling the search
// radius from the smallest reduced diagonal until d independent vectors
// appear. Among equal norms the sign representative with positive leading
// entry is used, and lexicographically larger representatives win.
MinimaProfile successive_minima(const QMatrix& gram);

inline constexpr std::uint64_t kDefaultOracleCapacity = 10'000'000;

// Exhaustive box scan with exact membership tests; independent of the LDL
// and LLL machinery. The box is |z_i - t_i|^2 <= R (G^{-1})_ii. Throws
// CapacityError when the box holds more than `capacity` candidates.
Integer oracle_count(const QMatrix& gram, const QVector& center, const Rational& radius_sq,
                     std::uint64_t capacity = kDefaultOracleCapacity);
// Number of candidates oracle_count would scan.
Integer oracle_box_size(const QMatrix& gram, const QVector& center, const Rational& radius_sq);

}  // namespace gon
