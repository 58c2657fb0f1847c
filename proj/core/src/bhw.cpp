#include "gon/bhw.hpp"

#include <cmath>
#include <numbers>

#include "gon/error.hpp"

namespace gon {

Integer QValues::product() const {
  Integer p = 1;
  for (const auto& x : q) p *= x;
  return p;
}

Integer q_from_lambda_sq(const LambdaSq& lambda_sq) {
  if (lambda_sq.is_infinite()) return 1;
  const Rational& l2 = *lambda_sq.value;
  if (l2 <= 0) throw InvalidInput("lambda^2 must be positive");
  const Rational ratio = Rational(4) / l2;
  return floor_sqrt(ratio) + 1;
}

QValues q_values(const MinimaProfile& body_minima) {
  QValues out;
  for (const auto& l : body_minima.lambda_sq) out.q.push_back(q_from_lambda_sq(l));
  return out;
}

MinimaProfile body_minima(const MinimaProfile& lattice_minima, const Rational& radius_sq) {
  if (radius_sq < 0) throw InvalidInput("radius_sq is negative");
  MinimaProfile out;
  out.witnesses = lattice_minima.witnesses;
  for (const auto& mu : lattice_minima.lambda_sq) {
    if (radius_sq == 0 || mu.is_infinite()) {
      out.lambda_sq.push_back(LambdaSq::infinite());
    } else {
      out.lambda_sq.push_back(LambdaSq::finite(*mu.value / radius_sq));
    }
  }
  return out;
}

BhwReport verify_theorem1(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball) {
  if (!(ball.space() == space)) throw InvalidInput("ball lives in a different inner product space");
  const CoefficientBall cb = to_coefficients(lattice, ball);
  const Enumerator form(cb.gram);
  BhwReport report;
  report.count = form.count(cb.center, cb.radius_sq);
  report.minima = body_minima(form.minima(), cb.radius_sq);
  report.q = q_values(report.minima);
  report.bound = report.q.product();
  mpz_pow_ui(report.first_theorem_bound.get_mpz_t(), report.q.q.front().get_mpz_t(), lattice.dim());
  report.holds = report.count <= report.bound;
  report.holds_first = report.count <= report.first_theorem_bound;
  return report;
}

bool verify_first_theorem(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball) {
  return verify_theorem1(lattice, space, ball).holds_first;
}

MinkowskiTerms minkowski_second_terms(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball) {
  if (ball.radius_sq() == 0) throw InvalidInput("Minkowski check needs a nondegenerate ball");
  const QMatrix g = gram(lattice, space);
  const MinimaProfile minima = body_minima(successive_minima(g), ball.radius_sq());
  const double d = static_cast<double>(lattice.dim());
  const double unit_ball = std::pow(std::numbers::pi, d / 2) / std::tgamma(d / 2 + 1);
  const double volume = unit_ball * std::pow(ball.radius_sq().get_d(), d / 2) /
                        std::sqrt(determinant(space.form()).get_d());
  MinkowskiTerms terms{volume / lattice.covolume().get_d(), 1.0};
  for (const auto& l : minima.lambda_sq) terms.bound *= 2.0 / std::sqrt(l.value->get_d());
  return terms;
}

bool check_minkowski_second(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball,
                            double rel_tol) {
  const MinkowskiTerms t = minkowski_second_terms(lattice, space, ball);
  return t.volume_ratio <= t.bound * (1.0 + rel_tol);
}

}  // namespace gon
