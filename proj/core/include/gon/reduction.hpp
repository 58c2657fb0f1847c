#pragma once

#include <utility>
#include <vector>

#include "gon/core_types.hpp"
#include "gon/linalg.hpp"

namespace gon {

// Integer change of basis with determinant +-1.
class UnimodularTransform {
 public:
  // Throws InvalidInput if det(u) is not +-1.
  explicit UnimodularTransform(ZMatrix u);
  static UnimodularTransform identity(std::size_t n) { return UnimodularTransform(ZMatrix::identity(n)); }

  const ZMatrix& matrix() const { return u_; }
  bool operator==(const UnimodularTransform& other) const = default;

 private:
  ZMatrix u_;
};

struct LllResult {
  UnimodularTransform transform;  // U
  QMatrix gram;                   // U^T G U
};

inline constexpr int kLllDeltaNumerator = 3;
inline constexpr int kLllDeltaDenominator = 4;

// Exact LLL on a Gram matrix with delta = 3/4: |mu_ij| <= 1/2 and
// D_k >= (delta - mu_{k,k-1}^2) D_{k-1}.
LllResult lll_reduce(const QMatrix& gram);

// True when `gram` is size-reduced and satisfies the Lovasz condition.
bool is_lll_reduced(const QMatrix& gram);

struct HnfResult {
  ZMatrix h;  // A V
  UnimodularTransform v;
};

// Column-style Hermite normal form of a full-column-rank m x n matrix:
// A V = H, H lower triangular with strictly increasing pivot rows, positive
// pivots, and every entry left of a pivot reduced into [0, pivot).
HnfResult hnf(const ZMatrix& a);

// Builds e^1..e^d generating the lattice with lin(e^1..e^i) = lin(a^1..a^i).
// With A = [a^1..a^d] in coefficients, the transposed HNF gives a unimodular
// W with W A upper triangular; E = W^{-1}.
FlagBasis extend_to_flag_basis(const Lattice& lattice, const std::vector<ZVector>& witnesses);

// E = {x : (x - center)^T form (x - center) <= 1}.
struct EllipsoidData {
  QVector center;
  QMatrix form;
};

// The ellipsoid as Ball(center, 1) of InnerProductSpace(form); no change of
// coordinates is performed.
std::pair<InnerProductSpace, Ball> ellipsoid_to_ball_form(const EllipsoidData& ellipsoid);

}  // namespace gon
