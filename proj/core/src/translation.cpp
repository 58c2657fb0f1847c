#include "gon/translation.hpp"

#include <string>
#include <utility>

#include "gon/error.hpp"

namespace gon {

bool separated(const Rational& dist_sq, const Rational& ra_sq, const Rational& rb_sq) {
  // d^2 > a + b + 2 sqrt(ab)  <=>  d^2 - a - b > 0 and (d^2 - a - b)^2 > 4ab.
  const Rational slack = dist_sq - ra_sq - rb_sq;
  if (slack <= 0) return false;
  return slack * slack > 4 * ra_sq * rb_sq;
}

Rational coset_distance_sq(const Enumerator& form, const QVector& x, const Rational& scale) {
  if (scale <= 0) throw InvalidInput("coset scale must be positive");
  const QVector target = scale_vector(x, -1 / scale);
  return scale * scale * form.closest(target).dist_sq;
}

bool certify_all_t(const Enumerator& form, const QVector& u, const Rational& scale) {
  if (scale <= 0) throw InvalidInput("coset scale must be positive");
  // With l = s y: <u, s y> + s^2 ||y||^2 >= 0  <=>  <u/s, y> + ||y||^2 >= 0.
  const QVector v = scale_vector(u, 1 / scale);
  const QMatrix& g = form.gram();
  const Rational radius_sq = quadratic(g, v);
  const QVector origin(v.size());
  bool ok = true;
  form.for_each(origin, radius_sq, [&](const ZVector& y, const Rational& norm) {
    if (!ok) return;
    if (bilinear(g, v, to_rational(y)) + norm < 0) ok = false;
  });
  return ok;
}

CoefficientTranslation translate_spheres(const Enumerator& form, const std::vector<Sphere>& spheres,
                                         const Rational& scale) {
  const std::size_t n = spheres.size();
  CoefficientTranslation out;
  out.d_sq = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d = coset_distance_sq(form, subtract(spheres[i].center, spheres[j].center), scale);
      out.d_sq(i, j) = d;
      out.d_sq(j, i) = d;
      if (!separated(d, spheres[i].radius_sq, spheres[j].radius_sq)) {
        throw HypothesisViolation("spheres " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " are not separated modulo the lattice (d^2 = " + to_string(d) + ")");
      }
    }
  }
  if (n == 0) {
    out.certified_all_t = true;
    return out;
  }
  out.u.push_back(spheres[0].center);
  for (std::size_t i = 1; i < n; ++i) {
    const QVector x = subtract(spheres[i].center, out.u[0]);
    const ClosestVectors cv = form.closest(scale_vector(x, 1 / scale));
    out.u.push_back(subtract(spheres[i].center, scale_vector(to_rational(cv.minimizers.front()), scale)));
  }
  out.certified_all_t = true;
  for (std::size_t i = 0; i < n && out.certified_all_t; ++i)
    for (std::size_t j = i + 1; j < n && out.certified_all_t; ++j)
      out.certified_all_t = certify_all_t(form, subtract(out.u[i], out.u[j]), scale);
  return out;
}

bool PairCheck::passed() const {
  if (!certified || !midpoint_minimal || !parallelogram) return false;
  for (const auto& s : samples)
    if (!s.at_least_d || !s.separated) return false;
  return true;
}

bool TranslationReport::passed() const {
  if (!first_row_optimal) return false;
  for (const auto& p : pairs)
    if (!p.passed()) return false;
  return true;
}

namespace {

// Lattice vectors l in scale * Z^d with ||l||^2 <= ||u||^2, in the form's geometry.
std::vector<QVector> short_vectors(const Enumerator& form, const QVector& u, const Rational& scale) {
  const Rational bound = quadratic(form.gram(), u) / (scale * scale);
  std::vector<QVector> out;
  form.for_each(QVector(u.size()), bound,
                [&](const ZVector& y, const Rational&) { out.push_back(scale_vector(to_rational(y), scale)); });
  return out;
}

}  // namespace

TranslationReport verify_translation(const Enumerator& form, const std::vector<Sphere>& spheres,
                                     const CoefficientTranslation& result, const std::vector<Rational>& t_samples,
                                     const Rational& scale) {
  const QMatrix& g = form.gram();
  const std::size_t n = spheres.size();
  if (result.u.size() != n) throw InvalidInput("translation result does not match the sphere pack");
  const Rational half(1, 2);
  TranslationReport report;
  report.first_row_optimal = true;
  for (std::size_t j = 1; j < n; ++j) {
    const QVector diff = subtract(result.u[0], result.u[j]);
    if (quadratic(g, diff) != result.d_sq(0, j)) report.first_row_optimal = false;
    if (coset_distance_sq(form, subtract(result.u[j], spheres[j].center), scale) != 0) {
      report.first_row_optimal = false;  // left its coset
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairCheck pc;
      pc.i = i;
      pc.j = j;
      pc.d_sq = result.d_sq(i, j);
      const QVector u = subtract(result.u[i], result.u[j]);
      pc.certified = certify_all_t(form, u, scale);

      const QVector half_u = scale_vector(u, half);
      const Rational half_norm = quadratic(g, half_u);
      const std::vector<QVector> candidates = short_vectors(form, u, scale);
      pc.midpoint_minimal = true;
      for (const auto& l : candidates)
        if (quadratic(g, add(half_u, l)) < half_norm) pc.midpoint_minimal = false;

      if (i >= 1) {
        // ||(u_i - u_j)/2 + l||^2 = ||a||^2/2 + ||b||^2/2 - ||(a - b)/2||^2 with
        // a = u_i - u_1 + l, b = u_1 - u_j + l; then bound via d_1i, d_1j.
        const QVector& u1 = result.u[0];
        const QVector mid = scale_vector(subtract(add(result.u[i], result.u[j]), scale_vector(u1, 2)), half);
        const Rational mid_norm = quadratic(g, mid);
        const Rational lower = half * result.d_sq(0, i) + half * result.d_sq(0, j) - mid_norm;
        if (lower != half_norm) pc.parallelogram = false;
        for (const auto& l : candidates) {
          const Rational lhs = quadratic(g, add(half_u, l));
          const Rational a = quadratic(g, add(subtract(result.u[i], u1), l));
          const Rational b = quadratic(g, add(subtract(u1, result.u[j]), l));
          if (lhs != half * a + half * b - mid_norm) pc.parallelogram = false;
          if (a < result.d_sq(0, i) || b < result.d_sq(0, j)) pc.parallelogram = false;
          if (lhs < lower) pc.parallelogram = false;
        }
      }

      for (const auto& t : t_samples) {
        if (t < 1) throw InvalidInput("t samples must be >= 1");
        SampleCheck sc;
        sc.t = t;
        sc.dt_sq = coset_distance_sq(form, u, scale * t);
        sc.at_least_d = sc.dt_sq >= pc.d_sq;
        sc.separated = separated(sc.dt_sq, spheres[i].radius_sq, spheres[j].radius_sq);
        pc.samples.push_back(std::move(sc));
      }
      report.pairs.push_back(std::move(pc));
    }
  }
  return report;
}

SpherePack::SpherePack(InnerProductSpace space, Lattice lattice, const std::vector<QVector>& centers,
                       const std::vector<Rational>& radii)
    : space_(std::move(space)), lattice_(std::move(lattice)) {
  if (centers.size() != radii.size()) throw InvalidInput("sphere pack needs one radius per center");
  if (lattice_.dim() != space_.dim()) throw InvalidInput("dimension mismatch: lattice and space");
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (radii[i] <= 0) throw InvalidInput("sphere radius must be positive");
    balls_.emplace_back(space_, centers[i], radii[i] * radii[i]);
  }
}

SpherePack::SpherePack(InnerProductSpace space, Lattice lattice, std::vector<Ball> balls)
    : space_(std::move(space)), lattice_(std::move(lattice)), balls_(std::move(balls)) {
  if (lattice_.dim() != space_.dim()) throw InvalidInput("dimension mismatch: lattice and space");
  for (const auto& b : balls_)
    if (!(b.space() == space_)) throw InvalidInput("sphere lives in a different inner product space");
}

QMatrix SpherePack::gram() const { return gon::gram(lattice_, space_); }

std::vector<Sphere> SpherePack::coefficient_spheres() const {
  std::vector<Sphere> out;
  for (const auto& b : balls_) out.push_back({lattice_.to_coefficients(b.center()), b.radius_sq()});
  return out;
}

Rational coset_distance_sq(const InnerProductSpace& space, const Lattice& lattice, const QVector& x) {
  return coset_distance_sq(Enumerator(gram(lattice, space)), lattice.to_coefficients(x));
}

bool certify_all_t(const InnerProductSpace& space, const Lattice& lattice, const QVector& u) {
  return certify_all_t(Enumerator(gram(lattice, space)), lattice.to_coefficients(u));
}

TranslationResult translate_spheres(const SpherePack& pack) {
  const Enumerator form(pack.gram());
  const CoefficientTranslation ct = translate_spheres(form, pack.coefficient_spheres());
  TranslationResult out{{}, ct.d_sq, ct.certified_all_t};
  for (const auto& u : ct.u) out.u.push_back(pack.lattice().to_ambient(u));
  return out;
}

TranslationReport verify_translation(const TranslationResult& result, const SpherePack& pack,
                                     const std::vector<Rational>& t_samples) {
  const Enumerator form(pack.gram());
  CoefficientTranslation ct{{}, result.d_sq, result.certified_all_t};
  for (const auto& u : result.u) ct.u.push_back(pack.lattice().to_coefficients(u));
  return verify_translation(form, pack.coefficient_spheres(), ct, t_samples);
}

}  // namespace gon
