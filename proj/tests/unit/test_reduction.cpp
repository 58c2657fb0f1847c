#include <gtest/gtest.h>

#include "gon/enumeration.hpp"
#include "gon/error.hpp"
#include "gon/reduction.hpp"
#include "support/oracles.hpp"

namespace gon {
namespace {

using testing::Gen;

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Smallest nonzero norm over a box, by brute force.
Rational box_shortest(const QMatrix& g, long radius) {
  std::optional<Rational> best;
  const ZVector zero(g.rows());
  testing::for_each_in_box(zero, radius, [&](const ZVector& z) {
    if (z == zero) return;
    const Rational n = testing::naive_quadratic(g, to_rational(z));
    if (!best || n < *best) best = n;
  });
  return *best;
}

TEST(LllTest, IdentityIsAlreadyReduced) {
  const LllResult r = lll_reduce(QMatrix::identity(3));
  EXPECT_EQ(r.transform.matrix(), ZMatrix::identity(3));
  EXPECT_EQ(r.gram, QMatrix::identity(3));
}

TEST(LllTest, SkewedBasisFindsShortVector) {
  // Basis columns (1,0) and (100,1), Euclidean.
  const QMatrix g{{q(1), q(100)}, {q(100), q(10001)}};
  const LllResult r = lll_reduce(g);
  EXPECT_EQ(box_shortest(g, 120), 1);
  EXPECT_EQ(r.gram(0, 0), 1);
  EXPECT_EQ(r.gram(1, 1), 1);
  EXPECT_TRUE(is_lll_reduced(r.gram));
}

TEST(LllTest, SortsDiagonalForm) {
  const LllResult r = lll_reduce(QMatrix{{q(4), q(0)}, {q(0), q(1)}});
  EXPECT_EQ(r.gram(0, 0), 1);
  EXPECT_EQ(r.gram(1, 1), 4);
}

TEST(LllTest, RejectsNonPositiveDefinite) {
  EXPECT_THROW(lll_reduce(QMatrix{{q(1), q(2)}, {q(2), q(1)}}), InvalidInput);
}

TEST(LllTest, RandomFormsPreserveLatticeAndReduce) {
  Gen gen(101);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const QMatrix base = gen.rational_pd_form(n, 2, 3);
    const QMatrix u0 = to_rational(gen.unimodular(n, 4, 6));
    const QMatrix g = testing::naive_product(testing::naive_transpose(u0), testing::naive_product(base, u0));
    const LllResult r = lll_reduce(g);
    const QMatrix u = to_rational(r.transform.matrix());
    EXPECT_EQ(testing::naive_product(testing::naive_transpose(u), testing::naive_product(g, u)), r.gram);
    EXPECT_EQ(testing::leibniz_det(r.gram), testing::leibniz_det(g));
    const Rational det_u = testing::leibniz_det(u);
    EXPECT_TRUE(det_u == 1 || det_u == -1);
    EXPECT_TRUE(is_lll_reduced(r.gram));
  }
}

TEST(HnfTest, Identity) {
  const HnfResult r = hnf(ZMatrix::identity(3));
  EXPECT_EQ(r.h, ZMatrix::identity(3));
}

TEST(HnfTest, SingleColumn) {
  const HnfResult r = hnf(ZMatrix{{Integer(2)}, {Integer(4)}});
  EXPECT_EQ(r.h, (ZMatrix{{Integer(2)}, {Integer(4)}}));
}

TEST(HnfTest, DeterminantPreservedUpToSign) {
  const ZMatrix a{{Integer(2), Integer(1)}, {Integer(0), Integer(3)}};
  const HnfResult r = hnf(a);
  const Rational det_a = testing::leibniz_det(to_rational(a));
  EXPECT_EQ(abs(det_a), 6);
  EXPECT_EQ(abs(testing::leibniz_det(to_rational(r.h))), 6);
}

TEST(HnfTest, RejectsRankDeficiency) {
  EXPECT_THROW(hnf(ZMatrix{{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}), InvalidInput);
  EXPECT_THROW(hnf(ZMatrix{{Integer(1), Integer(2)}}), InvalidInput);
}

TEST(HnfTest, RandomMatricesSatisfyNormalForm) {
  Gen gen(7);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t m = n + static_cast<std::size_t>(gen.integer(0, 2));
    ZMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = gen.integer(-6, 6);
    if (testing::naive_rank([&] {
          std::vector<ZVector> cols;
          for (std::size_t j = 0; j < n; ++j) cols.push_back(a.column(j));
          return cols;
        }()) < n) {
      EXPECT_THROW(hnf(a), InvalidInput);
      continue;
    }
    const HnfResult r = hnf(a);
    EXPECT_EQ(multiply(a, r.v.matrix()), r.h);
    std::size_t prev_pivot = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t p = 0;
      while (p < m && r.h(p, j) == 0) ++p;
      ASSERT_LT(p, m);
      if (j > 0) EXPECT_GT(p, prev_pivot);
      prev_pivot = p;
      EXPECT_GT(r.h(p, j), 0);
      for (std::size_t c = 0; c < j; ++c) {
        EXPECT_GE(r.h(p, c), 0);
        EXPECT_LT(r.h(p, c), r.h(p, j));
      }
      for (std::size_t c = j + 1; c < n; ++c) EXPECT_EQ(r.h(p, c), 0);
    }
  }
}

void expect_flag_invariants(const FlagBasis& f, const std::vector<ZVector>& a) {
  const Rational det = testing::leibniz_det(to_rational(f.coefficients()));
  EXPECT_TRUE(det == 1 || det == -1);
  std::vector<ZVector> prefix;
  for (std::size_t i = 0; i < a.size(); ++i) {
    prefix.push_back(a[i]);
    prefix.push_back(f.vector(i));
    EXPECT_EQ(testing::naive_rank(prefix), i + 1);
  }
}

TEST(FlagBasisTest, StandardWitnesses) {
  const std::vector<ZVector> a{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
  const FlagBasis f = extend_to_flag_basis(Lattice::integer(2), a);
  EXPECT_EQ(f.coefficients(), ZMatrix::identity(2));
}

TEST(FlagBasisTest, SaturatesTheFirstSpan) {
  const std::vector<ZVector> a{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}};
  const FlagBasis f = extend_to_flag_basis(Lattice::integer(2), a);
  EXPECT_EQ(f.vector(0), (ZVector{Integer(1), Integer(0)}));
  EXPECT_EQ(f.vector(1), (ZVector{Integer(0), Integer(1)}));
  expect_flag_invariants(f, a);
}

TEST(FlagBasisTest, NonOrthogonalWitnesses) {
  const std::vector<ZVector> a{{Integer(2), Integer(1)}, {Integer(1), Integer(1)}};
  const FlagBasis f = extend_to_flag_basis(Lattice::integer(2), a);
  expect_flag_invariants(f, a);
  // Deterministic.
  EXPECT_EQ(extend_to_flag_basis(Lattice::integer(2), a).coefficients(), f.coefficients());
}

TEST(FlagBasisTest, RejectsDependentWitnesses) {
  EXPECT_THROW(extend_to_flag_basis(Lattice::integer(2), {{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}),
               InvalidInput);
}

TEST(FlagBasisTest, RandomWitnessSets) {
  Gen gen(13);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    std::vector<ZVector> a;
    for (std::size_t i = 0; i < n; ++i) {
      ZVector v;
      for (std::size_t j = 0; j < n; ++j) v.push_back(Integer(gen.integer(-5, 5)));
      a.push_back(v);
    }
    if (testing::naive_rank(a) < n) continue;
    expect_flag_invariants(extend_to_flag_basis(Lattice::integer(n), a), a);
  }
}

TEST(EllipsoidFormTest, ReadsFormDirectly) {
  const auto [space, ball] = ellipsoid_to_ball_form({{q(0), q(0)}, QMatrix::identity(2)});
  EXPECT_EQ(space.form(), QMatrix::identity(2));
  EXPECT_EQ(ball.radius_sq(), 1);
  const auto [space2, ball2] = ellipsoid_to_ball_form({{q(0), q(0)}, QMatrix{{q(1), q(0)}, {q(0), q(4)}}});
  EXPECT_EQ(space2.form(), (QMatrix{{q(1), q(0)}, {q(0), q(4)}}));
  EXPECT_EQ(ball2.radius_sq(), 1);
  EXPECT_THROW(ellipsoid_to_ball_form({{q(0), q(0)}, QMatrix{{q(1), q(2)}, {q(2), q(1)}}}), InvalidInput);
}

TEST(EllipsoidFormTest, CountsMatchAmbientPolynomial) {
  // (x-1)^2 + (x-1) y + y^2 <= 1.
  const auto [space, ball] = ellipsoid_to_ball_form({{q(1), q(0)}, QMatrix{{q(1), q(1, 2)}, {q(1, 2), q(1)}}});
  long brute = 0;
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y)
      if ((x - 1) * (x - 1) + (x - 1) * y + y * y <= 1) ++brute;
  EXPECT_EQ(brute, 7);
  EXPECT_EQ(count_ball(Lattice::integer(2), space, ball), 7);
}

TEST(EllipsoidFormTest, RandomCountsMatchAmbientBruteForce) {
  Gen gen(19);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const QMatrix form = gen.rational_pd_form(n, 1, 3);
    const QVector center = gen.rational_vector(n, 4, 3);
    const auto [space, ball] = ellipsoid_to_ball_form({center, form});
    const Lattice lattice = Lattice::integer(n);
    long brute = 0;
    testing::for_each_in_box(testing::rounded(center), 4, [&](const ZVector& z) {
      if (testing::naive_quadratic(form, z, center) <= 1) ++brute;
    });
    EXPECT_EQ(count_ball(lattice, space, ball), brute);
  }
}

}  // namespace
}  // namespace gon
