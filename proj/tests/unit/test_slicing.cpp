#include <gtest/gtest.h>

#include "gon/error.hpp"
#include "gon/reduction.hpp"
#include "gon/slicing.hpp"
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

FlagBasis standard_flag(std::size_t d) {
  std::vector<ZVector> w;
  for (std::size_t i = 0; i < d; ++i) w.push_back(ZMatrix::identity(d).column(i));
  return FlagBasis(Lattice::integer(d), ZMatrix::identity(d), w);
}

TEST(SliceTest, Examples) {
  const QMatrix id = QMatrix::identity(2);
  const Sphere ball{{q(0), q(0)}, q(4)};
  const Slice one = slice_ball(id, ball, Integer(1));
  EXPECT_EQ(one.radius_sq, 3);
  EXPECT_EQ(one.center, (QVector{q(0)}));
  EXPECT_EQ(Enumerator(QMatrix::identity(1)).count(one.center, one.radius_sq), 3);
  EXPECT_EQ(slice_ball(id, ball, Integer(2)).radius_sq, 0);
  EXPECT_EQ(slice_ball(id, ball, Integer(-2)).radius_sq, 0);
  const Slice far = slice_ball(id, ball, Integer(3));
  EXPECT_EQ(far.radius_sq, -5);
  EXPECT_TRUE(far.empty());
  EXPECT_THROW(Slicer(QMatrix::identity(1)), InvalidInput);

  const Slicer s(id);
  const IntRange h = s.heights(ball);
  EXPECT_EQ(h.lo, -2);
  EXPECT_EQ(h.hi, 2);

  // Hexagonal form: x^2 + x y + y^2 scaled by 2; at y = 1 the slice is centred at -1/2.
  const Slice hex = slice_ball(QMatrix{{q(2), q(1)}, {q(1), q(2)}}, Sphere{{q(0), q(0)}, q(2)}, Integer(1));
  EXPECT_EQ(hex.center, (QVector{q(-1, 2)}));
  EXPECT_EQ(hex.radius_sq, q(1, 2));
}

TEST(SliceTest, MembershipMatchesParentBall) {
  Gen gen(89);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const QMatrix g = gen.rational_pd_form(n, 2, 3);
    const Sphere ball{gen.rational_vector(n, 5, 3), make_rational(gen.integer(0, 40), gen.integer(1, 3))};
    const Slicer slicer(g);
    QMatrix g11(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) g11(i, j) = g(i, j);
    for (int trial = 0; trial < 20; ++trial) {
      const Integer m(gen.integer(-4, 4));
      const Slice s = slicer.slice(ball, m);
      QVector y = gen.rational_vector(n - 1, 8, 2);
      QVector full = y;
      full.push_back(Rational(m));
      for (std::size_t i = 0; i < n; ++i) full[i] -= ball.center[i];
      const bool in_parent = testing::naive_quadratic(g, full) <= ball.radius_sq;
      QVector local = y;
      for (std::size_t i = 0; i + 1 < n; ++i) local[i] -= s.center[i];
      EXPECT_EQ(in_parent, testing::naive_quadratic(g11, local) <= s.radius_sq);
    }
  }
}

TEST(SliceTest, PartitionIdentity) {
  Gen gen(97);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const QMatrix u = to_rational(gen.unimodular(n, 2, 3));
    const QMatrix g =
        testing::naive_product(testing::naive_transpose(u), testing::naive_product(gen.rational_pd_form(n, 1, 2), u));
    const Sphere ball{gen.rational_vector(n, 5, 3), make_rational(gen.integer(0, 30), gen.integer(1, 3))};
    const Slicer slicer(g);
    const Enumerator sub(slicer.sub_gram());
    Integer total = 0;
    const IntRange h = slicer.heights(ball);
    for (Integer m = h.lo; m <= h.hi; ++m) {
      const Slice s = slicer.slice(ball, m);
      if (!s.empty()) total += sub.count(s.center, s.radius_sq);
    }
    EXPECT_EQ(total, oracle_count(g, ball.center, ball.radius_sq));
  }
}

TEST(ConditionTest, C1Examples) {
  const Enumerator form(QMatrix::identity(2));
  EXPECT_TRUE(check_c1(form, {Sphere{{q(0), q(0)}, q(1)}}, ints({3, 3})).holds);
  const C1Result big = check_c1(form, {Sphere{{q(0), q(0)}, q(4)}}, ints({1, 1}));
  EXPECT_FALSE(big.holds);
  ASSERT_TRUE(big.violation.has_value());
  EXPECT_EQ(big.violation->index, 1u);
  EXPECT_EQ(big.violation->ball, 0u);
  EXPECT_NE(big.violation->lattice_vector, (ZVector{Integer(0), Integer(0)}));
  EXPECT_TRUE(check_c1(form, {Sphere{{q(1, 3), q(0)}, q(0)}}, ints({1, 1})).holds);

  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const StrongInstance inst(Lattice::integer(2), e2, {Ball(e2, {q(0), q(0)}, q(1))}, standard_flag(2),
                            ints({3, 3, 1}));
  EXPECT_TRUE(check_c1(inst).holds);
}

TEST(ConditionTest, C2Examples) {
  const Enumerator form(QMatrix::identity(2));
  EXPECT_TRUE(check_c2(form, {Sphere{{q(0), q(0)}, q(1)}}, Integer(1)).holds);
  const C2Result touching =
      check_c2(form, {Sphere{{q(0), q(0)}, q(1, 16)}, Sphere{{q(1, 2), q(0)}, q(1, 16)}}, Integer(1));
  EXPECT_FALSE(touching.holds);
  ASSERT_TRUE(touching.violation.has_value());
  EXPECT_EQ(touching.violation->dist_sq, q(1, 4));
  EXPECT_TRUE(check_c2(form, {Sphere{{q(0), q(0)}, q(1, 25)}, Sphere{{q(1, 2), q(0)}, q(1, 25)}}, Integer(1)).holds);
  // At scale 2 the centres are 1/2 apart modulo 2Z^2 as well.
  EXPECT_TRUE(check_c2(form, {Sphere{{q(0), q(0)}, q(1, 25)}, Sphere{{q(3, 2), q(0)}, q(1, 25)}}, Integer(2)).holds);
  EXPECT_FALSE(check_c2(form, {Sphere{{q(0), q(0)}, q(1, 25)}, Sphere{{q(2), q(0)}, q(1, 25)}}, Integer(2)).holds);
}

TEST(StrongInstanceTest, Validation) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const std::vector<Ball> balls = {Ball(e2, {q(0), q(0)}, q(1))};
  EXPECT_THROW(StrongInstance(Lattice::integer(2), e2, balls, standard_flag(2), ints({3, 3})), InvalidInput);
  EXPECT_THROW(StrongInstance(Lattice::integer(2), e2, balls, standard_flag(2), ints({3, 4, 1})), InvalidInput);
  EXPECT_THROW(StrongInstance(Lattice::integer(2), e2, balls, standard_flag(2), ints({3, 3, 0})), InvalidInput);
  EXPECT_THROW(StrongInstance(Lattice::integer(2), e2, {}, standard_flag(2), ints({3, 3, 1})), InvalidInput);
}

TEST(VerifyStrongTest, UnitDisk) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const StrongInstance inst(Lattice::integer(2), e2, {Ball(e2, {q(0), q(0)}, q(1))}, standard_flag(2),
                            ints({3, 3, 1}));
  const StrongReport r = verify_strong(inst);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.total, 5);
  EXPECT_EQ(r.bound, 9);
  EXPECT_EQ(r.root.direct_count, 5);
  ASSERT_EQ(r.root.residues.size(), 3u);
  // m = 0 carries three points, m = 1 and m = -1 (residue 2) one each.
  EXPECT_EQ(r.root.residues[0].residue, 0);
  EXPECT_EQ(r.root.residues[0].sum, 3);
  EXPECT_EQ(r.root.residues[1].residue, 1);
  EXPECT_EQ(r.root.residues[1].sum, 1);
  EXPECT_EQ(r.root.residues[2].residue, 2);
  EXPECT_EQ(r.root.residues[2].sum, 1);
  for (const auto& res : r.root.residues) {
    EXPECT_EQ(res.bound, 3);
    ASSERT_NE(res.child, nullptr);
    EXPECT_EQ(res.child->dim, 1u);
    EXPECT_TRUE(res.child->passed());
  }
  EXPECT_FALSE(r.root.first_failure().has_value());
  EXPECT_GT(r.root.node_count(), 3u);
}

TEST(VerifyStrongTest, DegenerateAndBaseCases) {
  const InnerProductSpace e3 = InnerProductSpace::euclidean(3);
  const StrongInstance point(Lattice::integer(3), e3, {Ball(e3, {q(0), q(0), q(0)}, q(0))}, standard_flag(3),
                             ints({1, 1, 1, 1}));
  const StrongReport p = verify_strong(point);
  EXPECT_TRUE(p.passed);
  EXPECT_EQ(p.total, 1);
  EXPECT_EQ(p.bound, 1);

  const InnerProductSpace e1 = InnerProductSpace::euclidean(1);
  const StrongInstance intervals(Lattice::integer(1), e1,
                                 {Ball(e1, {q(0)}, q(1, 25)), Ball(e1, {q(1, 2)}, q(1, 25))}, standard_flag(1),
                                 ints({3, 1}));
  const StrongReport b = verify_strong(intervals);
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.total, 1);
  EXPECT_EQ(b.bound, 3);
}

TEST(VerifyStrongTest, HypothesisViolations) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const StrongInstance c1(Lattice::integer(2), e2, {Ball(e2, {q(0), q(0)}, q(4))}, standard_flag(2),
                          ints({1, 1, 1}));
  EXPECT_THROW(verify_strong(c1), HypothesisViolation);
  const StrongInstance c2(Lattice::integer(2), e2,
                          {Ball(e2, {q(0), q(0)}, q(1, 16)), Ball(e2, {q(1, 2), q(0)}, q(1, 16))}, standard_flag(2),
                          ints({3, 3, 1}));
  EXPECT_THROW(verify_strong(c2), HypothesisViolation);
}

TEST(VerifyStrongTest, RandomMultiBallInstances) {
  Gen gen(101);
  int run = 0;
  for (int k = 0; k < 60 && run < 25; ++k) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const InnerProductSpace space(gen.rational_pd_form(d, 1, 2));
    const Lattice lattice(to_rational(gen.unimodular(d, 2, 2)));
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Ball> balls;
    Rational biggest = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational r = make_rational(gen.integer(0, 8), gen.integer(1, 4));
      biggest = std::max(biggest, r);
      balls.emplace_back(space, gen.rational_vector(d, 6, 3), r);
    }
    // q from the largest ball's minima makes (C1) hold for every ball.
    const Enumerator form(gram(lattice, space));
    const MinimaProfile lat = form.minima();
    const QValues qv = q_values(body_minima(lat, biggest));
    std::vector<Integer> qs = qv.q;
    qs.push_back(Integer(gen.integer(1, 2)));
    if (qs.back() > qs[d - 1]) qs.back() = qs[d - 1];
    const StrongInstance inst(lattice, space, balls, extend_to_flag_basis(lattice, lat.witnesses), qs);
    ASSERT_TRUE(check_c1(inst).holds);
    if (!check_c2(inst, qs.back()).holds) continue;
    ++run;
    const StrongReport r = verify_strong(inst);
    EXPECT_TRUE(r.passed) << (r.root.first_failure() ? r.root.first_failure()->name : "");
    Integer direct = 0;
    for (const auto& b : balls) direct += count_ball(lattice, space, b);
    EXPECT_EQ(r.total, direct);
    EXPECT_LE(r.total, r.bound);
  }
  EXPECT_GE(run, 10);
}

TEST(ViaStrongTest, Examples) {
  const InnerProductSpace e2 = InnerProductSpace::euclidean(2);
  const Lattice z2 = Lattice::integer(2);
  const ViaStrongReport disk = verify_theorem1_via_strong(z2, e2, Ball(e2, {q(0), q(0)}, q(1)));
  EXPECT_TRUE(disk.passed);
  EXPECT_TRUE(disk.c1_holds);
  EXPECT_TRUE(disk.count_matches);
  EXPECT_EQ(disk.bhw.count, 5);
  EXPECT_EQ(disk.bhw.bound, 9);
  ASSERT_TRUE(disk.strong.has_value());
  EXPECT_EQ(disk.strong->total, 5);

  const ViaStrongReport big = verify_theorem1_via_strong(z2, e2, Ball(e2, {q(0), q(0)}, q(4)));
  EXPECT_TRUE(big.passed);
  EXPECT_EQ(big.bhw.count, 13);
  EXPECT_EQ(big.bhw.bound, 25);

  const InnerProductSpace hex(QMatrix{{q(2), q(1)}, {q(1), q(2)}});
  const ViaStrongReport wide = verify_theorem1_via_strong(z2, hex, Ball(hex, {q(0), q(0)}, q(2)));
  EXPECT_TRUE(wide.passed);
  EXPECT_EQ(wide.bhw.count, 7);
  EXPECT_EQ(wide.bhw.bound, 9);
  const ViaStrongReport small = verify_theorem1_via_strong(z2, hex, Ball(hex, {q(0), q(0)}, q(1, 2)));
  EXPECT_TRUE(small.passed);
  EXPECT_EQ(small.bhw.count, 1);
  EXPECT_EQ(small.bhw.bound, 4);
}

TEST(ViaStrongTest, RandomInstances) {
  Gen gen(103);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const InnerProductSpace space(gen.rational_pd_form(d, 2, 3));
    const Lattice lattice(to_rational(gen.unimodular(d, 2, 3)));
    const Ball ball(space, gen.rational_vector(d, 6, 3), make_rational(gen.integer(0, 20), gen.integer(1, 3)));
    const ViaStrongReport r = verify_theorem1_via_strong(lattice, space, ball);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.c1_holds);
    EXPECT_TRUE(r.count_matches);
    EXPECT_EQ(r.bhw.count, count_ball(lattice, space, ball));
  }
}

}  // namespace
}  // namespace gon
