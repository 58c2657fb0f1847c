#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gon/core_types.hpp"
#include "gon/linalg.hpp"
#include "gon/translation.hpp"

namespace gon {

// {x : (x - center)^T Q (x - center) <= radius_sq} for the instance form Q,
// or {x : (x - center)^T form (x - center) <= 1} when `form` is given.
struct EllipsoidBody {
  QVector center;
  std::optional<Rational> radius_sq;
  std::optional<QMatrix> form;

  bool operator==(const EllipsoidBody&) const = default;
};

struct SphereSpec {
  QVector center;
  Rational radius;

  bool operator==(const SphereSpec&) const = default;
};

using Body = std::variant<EllipsoidBody, std::vector<SphereSpec>>;

// On-disk instance. Matrices are row-major; basis columns are the lattice
// generators. `flag` lists e^1..e^d as integer coefficient vectors.
struct Instance {
  std::size_t dim = 0;
  QMatrix lattice_basis;
  std::optional<QMatrix> form;
  Body body;
  std::optional<std::vector<Integer>> q_override;
  std::optional<std::vector<ZVector>> flag;

  bool operator==(const Instance&) const = default;

  bool is_ellipsoid() const { return std::holds_alternative<EllipsoidBody>(body); }
  Lattice lattice() const;
  InnerProductSpace space() const;
  // Every body as a ball of space(); an ellipsoid is one ball.
  std::vector<Ball> balls() const;
  // Requires a sphere body.
  SpherePack pack() const;
};

// Throws InvalidInput whose message starts with the offending field path,
// e.g. "lattice_basis[0][1]: denominator is zero".
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
// Canonical JSON; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);

}  // namespace gon
