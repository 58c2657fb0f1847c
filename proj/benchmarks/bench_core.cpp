#include <benchmark/benchmark.h>

#include "gon/bhw.hpp"
#include "gon/campaign.hpp"
#include "gon/reduction.hpp"
#include "gon/slicing.hpp"

namespace {

using namespace gon;

// A skewed Gram matrix B^T B for B = identity plus shears, dimension n.
QMatrix skewed_gram(std::size_t n) {
  ZMatrix b = ZMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    b(i, i - 1) = static_cast<long>(3 * i + 1);
    b(0, i) = -static_cast<long>(i + 2);
  }
  const QMatrix q = to_rational(b);
  QMatrix g = multiply(transpose(q), q);
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
  return g;
}

void BM_EnumerateBall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Enumerator form(QMatrix::identity(n));
  const QVector center(n, make_rational(1, 3));
  std::size_t points = 0;
  for (auto _ : state) {
    points = form.points(center, Rational(9)).size();
    benchmark::DoNotOptimize(points);
  }
  state.counters["points"] = static_cast<double>(points);
}
BENCHMARK(BM_EnumerateBall)->DenseRange(2, 5);

void BM_LllReduce(benchmark::State& state) {
  const QMatrix g = skewed_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(g));
}
BENCHMARK(BM_LllReduce)->DenseRange(2, 6);

void BM_SuccessiveMinima(benchmark::State& state) {
  const QMatrix g = skewed_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(g));
}
BENCHMARK(BM_SuccessiveMinima)->DenseRange(2, 5);

void BM_VerifyStrong(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const InnerProductSpace space = InnerProductSpace::euclidean(n);
  const Lattice lattice = Lattice::integer(n);
  const Ball ball(space, QVector(n, make_rational(1, 4)), Rational(4));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1_via_strong(lattice, space, ball));
}
BENCHMARK(BM_VerifyStrong)->DenseRange(2, 4);

void BM_Campaign(benchmark::State& state) {
  CampaignConfig config;
  config.seed = 1;
  config.count = 50;
  config.dim_min = 2;
  config.dim_max = 4;
  config.mode = CampaignMode::strong;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(config));
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
