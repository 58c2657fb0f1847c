#include "gon/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "gon/error.hpp"
#include "report.hpp"

namespace gon {
namespace {

inline constexpr long kMaxRadius = 3;
inline constexpr long kFormEntryBound = 1;
inline constexpr std::size_t kMaxPackDim = 3;
inline constexpr long kMaxPackSize = 5;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_rational(SplitMix64& rng, long bound) {
  const long den = rng.range(1, bound);
  return make_rational(rng.range(-bound, bound), den);
}

// p/q in [1/2, kMaxRadius] with p, q <= bound, or 0 one time in sixteen.
Rational random_radius(SplitMix64& rng, long bound) {
  if (rng.below(16) == 0) return 0;
  const long den = rng.range(1, bound);
  const long hi = std::min(bound, kMaxRadius * den);
  return make_rational(rng.range(std::min(hi, (den + 1) / 2), hi), den);
}

QVector random_point(SplitMix64& rng, std::size_t d, long bound) {
  QVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(random_rational(rng, bound));
  return v;
}

// Product of d elementary integer matrices applied to the identity: shears
// with multipliers in [-bound, bound] and, occasionally, a row scaling.
QMatrix random_basis(SplitMix64& rng, std::size_t d, long bound) {
  ZMatrix b = ZMatrix::identity(d);
  for (std::size_t step = 0; step < d; ++step) {
    const auto i = static_cast<std::size_t>(rng.below(d));
    if (d > 1 && rng.below(8) != 0) {
      auto j = static_cast<std::size_t>(rng.below(d - 1));
      if (j >= i) ++j;
      const long k = rng.range(-bound, bound);
      for (std::size_t c = 0; c < d; ++c) b(i, c) += k * b(j, c);
    } else {
      const long k = rng.range(1, std::min(bound, 3L));
      for (std::size_t c = 0; c < d; ++c) b(i, c) *= k;
    }
  }
  return to_rational(b);
}

// A^T A + I; half of the entries of A are zero.
QMatrix random_form(SplitMix64& rng, std::size_t d) {
  QMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (rng.below(2) == 0) a(i, j) = rng.range(-kFormEntryBound, kFormEntryBound);
  QMatrix g = multiply(transpose(a), a);
  for (std::size_t i = 0; i < d; ++i) g(i, i) += 1;
  return g;
}

std::vector<SphereSpec> random_pack(SplitMix64& rng, std::size_t d, long bound, const InnerProductSpace& space,
                                    const Lattice& lattice) {
  const auto n = static_cast<std::size_t>(rng.range(1, kMaxPackSize));
  std::vector<QVector> centers;
  // Redraw any centre that shares a coset with an earlier one.
  while (centers.size() < n) {
    QVector c = random_point(rng, d, bound);
    bool fresh = true;
    for (const auto& other : centers) fresh = fresh && coset_distance_sq(space, lattice, subtract(c, other)) > 0;
    if (fresh) centers.push_back(std::move(c));
  }
  std::vector<Rational> radii;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = random_radius(rng, bound);
    if (r == 0) r = make_rational(1, bound);
    radii.push_back(r);
  }
  // Halve every radius until all pairs are strictly separated.
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        const Rational s = radii[i] + radii[j];
        ok = coset_distance_sq(space, lattice, subtract(centers[i], centers[j])) > s * s;
      }
    if (ok) break;
    for (auto& r : radii) r /= 2;
  }
  std::vector<SphereSpec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({centers[i], radii[i]});
  return out;
}

io::Outcome evaluate(const CampaignConfig& config, const Instance& inst) {
  return io::guarded([&]() -> io::Outcome {
    switch (config.mode) {
      case CampaignMode::theorem1:
        return io::run_verify_bhw(inst, false);
      case CampaignMode::strong:
        return io::run_verify_bhw(inst, true);
      case CampaignMode::translation:
        return io::run_translate(inst, config.t_samples.empty() ? default_t_samples() : config.t_samples);
      case CampaignMode::oracle_diff:
        return io::run_oracle_diff(inst, config.oracle_capacity);
    }
    throw InvalidInput("mode: unknown");
  });
}

}  // namespace

int exit_code(Status status) { return static_cast<int>(status); }

const char* to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::verification_failure:
      return "verification_failure";
    case Status::invalid_input:
      return "invalid_input";
    case Status::hypothesis_violation:
      return "hypothesis_violation";
  }
  return "unknown";
}

const char* to_string(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::theorem1:
      return "theorem1";
    case CampaignMode::strong:
      return "strong";
    case CampaignMode::translation:
      return "translation";
    case CampaignMode::oracle_diff:
      return "oracle-diff";
  }
  return "unknown";
}

CampaignMode parse_mode(const std::string& name) {
  for (CampaignMode m :
       {CampaignMode::theorem1, CampaignMode::strong, CampaignMode::translation, CampaignMode::oracle_diff}) {
    if (name == to_string(m)) return m;
  }
  throw InvalidInput("mode: expected theorem1, strong, translation or oracle-diff, got \"" + name + "\"");
}

void validate(const CampaignConfig& config) {
  if (config.count == 0) throw InvalidInput("count: must be positive");
  if (config.dim_min == 0 || config.dim_min > config.dim_max || config.dim_max > 8)
    throw InvalidInput("dim: expected 1 <= D1 <= D2 <= 8");
  if (config.entry_bound < 1) throw InvalidInput("entry-bound: must be positive");
  if (config.jobs == 0) throw InvalidInput("jobs: must be positive");
  for (const auto& t : config.t_samples)
    if (t < 1) throw InvalidInput("t-samples: every t must be at least 1");
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % n;
}

long SplitMix64::range(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(span));
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  return mix(mix(seed) ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1)));
}

Instance generate_instance(const CampaignConfig& config, std::size_t index) {
  SplitMix64 rng(instance_seed(config.seed, index));
  const long b = config.entry_bound;
  std::size_t d = static_cast<std::size_t>(
      rng.range(static_cast<long>(config.dim_min), static_cast<long>(config.dim_max)));
  if (config.mode == CampaignMode::translation) d = std::min(d, kMaxPackDim);

  Instance inst;
  inst.dim = d;
  inst.lattice_basis = random_basis(rng, d, b);
  inst.form = random_form(rng, d);
  if (config.mode == CampaignMode::translation) {
    inst.body = random_pack(rng, d, b, InnerProductSpace(*inst.form), Lattice(inst.lattice_basis));
  } else {
    const QVector center = random_point(rng, d, b);
    const Rational r = random_radius(rng, b);
    inst.body = EllipsoidBody{center, r * r, std::nullopt};
  }
  return inst;
}

std::vector<Instance> generate_instances(const CampaignConfig& config) {
  validate(config);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < config.count; ++i) out.push_back(generate_instance(config, i));
  return out;
}

std::size_t CampaignResult::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [&](const InstanceOutcome& o) { return o.status == status; }));
}

Status CampaignResult::status() const {
  for (Status s : {Status::verification_failure, Status::invalid_input, Status::hypothesis_violation})
    if (count(s) > 0) return s;
  return Status::pass;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  validate(config);
  CampaignResult result;
  result.outcomes.resize(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      const Instance inst = generate_instance(config, i);
      const io::Outcome o = evaluate(config, inst);
      InstanceOutcome& out = result.outcomes[i];
      out.index = i;
      out.seed = instance_seed(config.seed, i);
      out.status = o.status;
      out.instance = serialize_instance(inst);
      out.report = o.report.dump();
    }
  };
  const std::size_t jobs = std::min(config.jobs, config.count);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

std::vector<Rational> default_t_samples() {
  return {make_rational(1, 1), make_rational(3, 2), make_rational(2, 1), make_rational(5, 2), make_rational(7, 1)};
}

}  // namespace gon
