#include <gtest/gtest.h>

#include <cmath>

#include "gon/bhw.hpp"
#include "gon/error.hpp"
#include "support/oracles.hpp"

namespace gon {
namespace {

using testing::Gen;

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(QValuesTest, Examples) {
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::finite(q(1))), 3);
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::finite(q(4))), 2);
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::finite(q(5))), 1);
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::finite(q(1, 4))), 5);
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::finite(q(4, 9))), 4);
  EXPECT_EQ(q_from_lambda_sq(LambdaSq::infinite()), 1);
  EXPECT_THROW(q_from_lambda_sq(LambdaSq::finite(q(0))), InvalidInput);
  EXPECT_THROW(q_from_lambda_sq(LambdaSq::finite(q(-1))), InvalidInput);
}

TEST(QValuesTest, IsTheLargestIntegerWithRoom) {
  Gen gen(53);
  for (int k = 0; k < 500; ++k) {
    const Rational l = make_rational(gen.integer(1, 400), gen.integer(1, 60));
    const Integer qq = q_from_lambda_sq(LambdaSq::finite(l));
    EXPECT_GE(qq, 1);
    EXPECT_GT(Rational(qq * qq) * l, 4);
    EXPECT_LE(Rational((qq - 1) * (qq - 1)) * l, 4);
  }
}

TEST(QValuesTest, NonIncreasingAlongProfile) {
  MinimaProfile p;
  p.lambda_sq = {LambdaSq::finite(q(1, 9)), LambdaSq::finite(q(1, 2)), LambdaSq::finite(q(3)),
                 LambdaSq::infinite()};
  EXPECT_EQ(q_values(p).q, ints({7, 3, 2, 1}));
  EXPECT_EQ(q_values(p).product(), 42);
}

TEST(BodyMinimaTest, ScalesWithRadius) {
  const MinimaProfile lat = successive_minima(QMatrix{{q(2), q(1)}, {q(1), q(2)}});
  const MinimaProfile body = body_minima(lat, q(1, 4));
  EXPECT_EQ(body.lambda_sq, (std::vector<LambdaSq>{LambdaSq::finite(8), LambdaSq::finite(8)}));
  EXPECT_EQ(body.witnesses, lat.witnesses);
  const MinimaProfile point = body_minima(lat, q(0));
  EXPECT_TRUE(point.lambda_sq[0].is_infinite());
  EXPECT_TRUE(point.lambda_sq[1].is_infinite());
  EXPECT_EQ(point.witnesses.size(), 2u);

  Gen gen(59);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const MinimaProfile m = successive_minima(gen.rational_pd_form(n, 2, 3));
    const Rational r = make_rational(gen.integer(1, 30), gen.integer(1, 7));
    const Rational s = make_rational(gen.integer(1, 5), gen.integer(1, 5));
    const MinimaProfile a = body_minima(m, r);
    const MinimaProfile b = body_minima(m, r * s * s);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(*b.lambda_sq[i].value * s * s, *a.lambda_sq[i].value);
  }
}

TEST(CountingBoundTest, Examples) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const Lattice z2 = Lattice::integer(2);

  const BhwReport disk = verify_theorem1(z2, e2, Ball(e2, {q(0), q(0)}, q(1)));
  EXPECT_EQ(disk.count, 5);
  EXPECT_EQ(disk.q.q, ints({3, 3}));
  EXPECT_EQ(disk.bound, 9);
  EXPECT_EQ(disk.first_theorem_bound, 9);
  EXPECT_TRUE(disk.holds);
  EXPECT_TRUE(disk.holds_first);

  const BhwReport big = verify_theorem1(z2, e2, Ball(e2, {q(0), q(0)}, q(4)));
  EXPECT_EQ(big.count, 13);
  EXPECT_EQ(big.q.q, ints({5, 5}));
  EXPECT_EQ(big.bound, 25);
  EXPECT_TRUE(big.holds);

  const BhwReport point = verify_theorem1(z2, e2, Ball(e2, {q(2), q(-1)}, q(0)));
  EXPECT_EQ(point.count, 1);
  EXPECT_EQ(point.q.q, ints({1, 1}));
  EXPECT_EQ(point.bound, 1);
  EXPECT_TRUE(point.holds);

  const BhwReport empty = verify_theorem1(z2, e2, Ball(e2, {q(1, 2), q(0)}, q(0)));
  EXPECT_EQ(empty.count, 0);
  EXPECT_TRUE(empty.holds);

  // Hexagonal lattice through its Gram matrix.
  const InnerProductSpace hex(QMatrix{{q(2), q(1)}, {q(1), q(2)}});
  const BhwReport small = verify_theorem1(z2, hex, Ball(hex, {q(0), q(0)}, q(1, 2)));
  EXPECT_EQ(small.count, 1);
  EXPECT_EQ(small.q.q, ints({2, 2}));
  const BhwReport wide = verify_theorem1(z2, hex, Ball(hex, {q(0), q(0)}, q(2)));
  EXPECT_EQ(wide.count, 7);
  EXPECT_EQ(wide.q.q, ints({3, 3}));
  EXPECT_TRUE(wide.holds);
}

TEST(CountingBoundTest, RandomInstancesSatisfyBothBounds) {
  Gen gen(61);
  for (int k = 0; k < 120; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const InnerProductSpace space(gen.rational_pd_form(n, 2, 3));
    QMatrix b = to_rational(gen.unimodular(n, 2, 3));
    for (std::size_t i = 0; i < n; ++i) {
      const long f = gen.integer(1, 3);
      for (std::size_t j = 0; j < n; ++j) b(i, j) *= f;
    }
    const Lattice lattice(b);
    const Ball ball(space, gen.rational_vector(n, 6, 3), make_rational(gen.integer(0, 27), gen.integer(1, 3)));
    const BhwReport r = verify_theorem1(lattice, space, ball);
    const CoefficientBall cb = to_coefficients(lattice, ball);
    EXPECT_EQ(r.count, oracle_count(cb.gram, cb.center, cb.radius_sq));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.holds_first);
    EXPECT_EQ(r.bound, r.q.product());
    EXPECT_LE(r.bound, r.first_theorem_bound);
    EXPECT_TRUE(verify_first_theorem(lattice, space, ball));
  }
}

TEST(MinkowskiTest, Examples) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const Lattice z2 = Lattice::integer(2);
  const MinkowskiTerms disk = minkowski_second_terms(z2, e2, Ball(e2, {q(0), q(0)}, q(1)));
  EXPECT_NEAR(disk.volume_ratio, M_PI, 1e-12);
  EXPECT_NEAR(disk.bound, 4.0, 1e-12);
  const MinkowskiTerms big = minkowski_second_terms(z2, e2, Ball(e2, {q(0), q(0)}, q(4)));
  EXPECT_NEAR(big.volume_ratio, 4 * M_PI, 1e-12);
  EXPECT_NEAR(big.bound, 16.0, 1e-12);

  // In one dimension the inequality is an equality: length 2r against 2r.
  const InnerProductSpace e1 = InnerProductSpace::euclidean(1);
  const MinkowskiTerms seg = minkowski_second_terms(Lattice::integer(1), e1, Ball(e1, {q(0)}, q(9, 4)));
  EXPECT_NEAR(seg.volume_ratio, 3.0, 1e-12);
  EXPECT_NEAR(seg.bound, 3.0, 1e-12);
  EXPECT_TRUE(check_minkowski_second(Lattice::integer(1), e1, Ball(e1, {q(0)}, q(9, 4))));

  EXPECT_THROW(minkowski_second_terms(z2, e2, Ball(e2, {q(0), q(0)}, q(0))), InvalidInput);
}

TEST(MinkowskiTest, RandomInstances) {
  Gen gen(67);
  for (int k = 0; k < 80; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const InnerProductSpace space(gen.rational_pd_form(n, 2, 3));
    QMatrix b = to_rational(gen.unimodular(n, 2, 3));
    const long f = gen.integer(1, 4);
    for (std::size_t j = 0; j < n; ++j) b(0, j) *= f;
    const Lattice lattice(b);
    const Ball ball(space, QVector(n), make_rational(gen.integer(1, 40), gen.integer(1, 5)));
    EXPECT_TRUE(check_minkowski_second(lattice, space, ball));
  }
}

}  // namespace
}  // namespace gon
