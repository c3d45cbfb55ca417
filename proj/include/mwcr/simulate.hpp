// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwcr/likelihood.hpp"

namespace mwcr {

/// Removal plan (R_1, ..., R_m) for a cohort of n units; requires
/// m + sum(R_i) = n.
class CensoringScheme {
 public:
  CensoringScheme(long n, std::vector<long> removals);

  /// R_1 = ... = R_{m-1} = 0, R_m = n - m.
  static CensoringScheme type2(long n, long m);
  static CensoringScheme complete(long n) { return type2(n, n); }
  /// m = floor(fraction * n); one unit withdrawn at every
  /// floor(n / (n - m))-th failure, the remainder at the last failure.
  static CensoringScheme spread(long n, double fraction = 0.8);

  long n() const noexcept { return n_; }
  long m() const noexcept { return static_cast<long>(removals_.size()); }
  const std::vector<long>& removals() const noexcept { return removals_; }

  bool is_type2() const noexcept;
  bool is_complete() const noexcept;

 private:
  long n_;
  std::vector<long> removals_;
};

enum class CauseMode {
  LatentMin,      // cause = argmin of the two latent lifetimes
  BernoulliHalf,  // lifetime from the pooled rate, cause by a fair coin
};

std::string cause_mode_name(CauseMode mode);
CauseMode parse_cause_mode(const std::string& name);

struct SimSpec {
  std::string name;
  ModelParams params;
  CensoringScheme scheme;
  CauseMode cause_mode = CauseMode::LatentMin;
  std::uint64_t seed = 0;
};

/// Sequential-removal simulation of a progressively Type-II censored
/// competing-risks sample: n latent lifetimes; at each of m steps the
/// smallest surviving lifetime is recorded and R_i survivors chosen
/// uniformly at random are withdrawn.
ProgressiveSample generate(const SimSpec& spec);
ProgressiveSample generate(const ModelParams& mp, const CensoringScheme& scheme, CauseMode mode, Rng& rng);

/// Four reference designs, n = 200:
///   1: (1, 0.6, 0.3, 0.1), all 200 failures observed
///   2: as 1 with CensoringScheme::spread(200)
///   3: (1, 1, 0.3, 0.1), all 200 failures observed
///   4: as 3 with CensoringScheme::spread(200)
std::vector<SimSpec> scheme_catalog();

/// Catalog entry by number 1..4 with the given seed and cause mode; throws
/// DomainError listing the valid numbers otherwise.
SimSpec catalog_scheme(int number, std::uint64_t seed, CauseMode mode = CauseMode::LatentMin);

}  // namespace mwcr
