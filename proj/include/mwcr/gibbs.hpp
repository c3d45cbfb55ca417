// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mwcr/likelihood.hpp"
#include "mwcr/prior.hpp"
#include "mwcr/rng.hpp"
#include "mwcr/slice.hpp"

namespace mwcr {

using SliceConfigs = std::array<SliceConfig, 4>;  // indexed by Param

struct ParamDiagnostics {
  SliceStats slice;
  std::uint64_t nonpositive_information = 0;
  std::uint64_t outside_support = 0;
  // Updates that started from a zero-density current point (possible
  // because the alpha/beta priors depend on the other coordinates).
  std::uint64_t reentries = 0;
};

using Diagnostics = std::array<ParamDiagnostics, 4>;

/// Called before each coordinate update; lets tests observe the scan order.
using SweepObserver = std::function<void(Param)>;

/// One deterministic-scan sweep: lambda1, lambda2, alpha, beta, each drawn
/// by slice sampling from its conditional posterior given the freshest values
/// of the others. Requires at least one failure of each cause.
ModelParams gibbs_sweep(const ModelParams& mp, const ProgressiveSample& s, const SliceConfigs& cfgs,
                        Rng& rng, Diagnostics& diag, const SweepObserver& observer = {});

/// Data-driven starting point: beta = pi / (sqrt(6) * sd(log t)) (the
/// Weibull-limit shape matching the spread of the log failure times), alpha
/// the geometric mean failure time, and lambda_j = m_j / exposure(alpha, beta),
/// the exact maximizer of the likelihood in lambda_j at that (alpha, beta).
ModelParams default_init(const ProgressiveSample& s);

struct ChainConfig {
  long iterations = 10000;  // M, including burn-in
  long burn_in = 2000;
  long thin = 1;
  std::uint64_t seed = 1;
  ModelParams init{1.0, 1.0, 1.0, 1.0};
  SliceConfigs slice{};

  void validate() const;
  long retained() const noexcept { return (iterations - burn_in) / thin; }
  /// Non-empty when (M - burn_in) / thin < 100.
  std::string warning() const;
};

/// Chain config with burn-in M/5, thin 1 and default_init(s).
ChainConfig default_chain_config(const ProgressiveSample& s, long iterations, std::uint64_t seed);

struct Chain {
  std::vector<ModelParams> draws;
  Diagnostics diagnostics{};
  ChainConfig config;
  std::string rng_algorithm;

  std::vector<double> column(Param p) const;
};

/// Runs `iterations` sweeps from `init`, keeping every thin-th state after
/// burn-in. A failing sweep raises ChainAborted naming the iteration.
Chain run_chain(const ChainConfig& cc, const ProgressiveSample& s);

}  // namespace mwcr
