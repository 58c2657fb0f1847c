#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gon/enumeration.hpp"
#include "gon/instance_io.hpp"

namespace gon {

// Ordered by exit code.
enum class Status { pass = 0, verification_failure = 1, invalid_input = 2, hypothesis_violation = 3 };

int exit_code(Status status);
const char* to_string(Status status);

enum class CampaignMode { theorem1, strong, translation, oracle_diff };

const char* to_string(CampaignMode mode);
// Throws InvalidInput for unknown names.
CampaignMode parse_mode(const std::string& name);

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t dim_min = 2;
  std::size_t dim_max = 2;
  long entry_bound = 5;
  CampaignMode mode = CampaignMode::theorem1;
  std::size_t jobs = 1;
  std::vector<Rational> t_samples;  // translation mode; empty means the defaults
  std::uint64_t oracle_capacity = kDefaultOracleCapacity;
};

// Throws InvalidInput for an unusable configuration.
void validate(const CampaignConfig& config);

// Portable splitmix64 stream; the same seed gives the same numbers everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  // Uniform in [0, n) by rejection, n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long range(long lo, long hi);

 private:
  std::uint64_t state_;
};

// Seed of instance `index`, independent of generation order.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

// Translation mode yields sphere packs (dimension capped at 3, at most five
// spheres, radii shrunk until every pair is separated); the other modes
// yield a single ball.
Instance generate_instance(const CampaignConfig& config, std::size_t index);
std::vector<Instance> generate_instances(const CampaignConfig& config);

struct InstanceOutcome {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Status status = Status::pass;
  std::string instance;  // canonical JSON
  std::string report;    // compact JSON of the mode's result
};

struct CampaignResult {
  std::vector<InstanceOutcome> outcomes;  // sorted by index

  std::size_t count(Status status) const;
  // Worst status: any failure, else any invalid input, else any hypothesis violation.
  Status status() const;
};

CampaignResult run_campaign(const CampaignConfig& config);

std::vector<Rational> default_t_samples();

}  // namespace gon
