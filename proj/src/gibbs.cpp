// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "mwcr/error.hpp"

namespace mwcr {

ModelParams gibbs_sweep(const ModelParams& mp, const ProgressiveSample& s, const SliceConfigs& cfgs,
                        Rng& rng, Diagnostics& diag, const SweepObserver& observer) {
  require_both_causes(s);
  ModelParams state = mp;
  for (Param p : kAllParams) {
    if (observer) observer(p);
    const auto idx = static_cast<std::size_t>(p);
    ParamDiagnostics& d = diag[idx];
    const ConditionalTarget ct(p, state, s);
    auto log_density = [&](double x) {
      const ConditionalEval e = evaluate_conditional_posterior(ct, x);
      if (e.status == EvalStatus::NonpositiveInformation) ++d.nonpositive_information;
      if (e.status == EvalStatus::OutsideSupport) ++d.outside_support;
      return e.log_density;
    };
    bool reentered = false;
    const double next = slice_step_reentrant(log_density, state.get(p), cfgs[idx], rng, d.slice, reentered);
    if (reentered) ++d.reentries;
    state = state.with(p, next);
  }
  return state;
}

ModelParams default_init(const ProgressiveSample& s) {
  const auto logt = s.log_times();
  const auto m = static_cast<double>(logt.size());
  double mean = 0.0;
  for (double v : logt) mean += v;
  mean /= m;
  double ss = 0.0;
  for (double v : logt) ss += (v - mean) * (v - mean);
  const double sd = logt.size() > 1 ? std::sqrt(ss / (m - 1.0)) : 0.0;
  const double beta = sd > 0.0 ? std::numbers::pi / (std::sqrt(6.0) * sd) : 1.0;
  const double alpha = std::exp(mean);
  const double exp_sum = exposure(s, alpha, beta);
  if (!(exp_sum > 0.0) || !std::isfinite(exp_sum)) {
    throw NumericError("could not derive a starting point from the data");
  }
  return ModelParams(std::max(1.0, static_cast<double>(s.m1())) / exp_sum,
                     std::max(1.0, static_cast<double>(s.m2())) / exp_sum, alpha, beta);
}

void ChainConfig::validate() const {
  if (iterations < 1) throw DomainError("iterations must be positive");
  if (burn_in < 0 || burn_in >= iterations) throw DomainError("burn-in must satisfy 0 <= burn_in < iterations");
  if (thin < 1) throw DomainError("thin must be positive");
  for (const SliceConfig& c : slice) c.validate();
}

std::string ChainConfig::warning() const {
  if (retained() >= 100) return {};
  return "only " + std::to_string(retained()) + " draws retained after burn-in and thinning (100 recommended)";
}

ChainConfig default_chain_config(const ProgressiveSample& s, long iterations, std::uint64_t seed) {
  ChainConfig cc;
  cc.iterations = iterations;
  cc.burn_in = iterations / 5;
  cc.thin = 1;
  cc.seed = seed;
  cc.init = default_init(s);
  return cc;
}

std::vector<double> Chain::column(Param p) const {
  std::vector<double> out;
  out.reserve(draws.size());
  for (const ModelParams& d : draws) out.push_back(d.get(p));
  return out;
}

Chain run_chain(const ChainConfig& cc, const ProgressiveSample& s) {
  cc.validate();
  require_both_causes(s);
  Chain chain;
  chain.config = cc;
  chain.rng_algorithm = std::string(Rng::kAlgorithm);
  chain.draws.reserve(static_cast<std::size_t>(cc.retained()));

  Rng rng(cc.seed);
  ModelParams state = cc.init;
  for (long it = 0; it < cc.iterations; ++it) {
    try {
      state = gibbs_sweep(state, s, cc.slice, rng, chain.diagnostics);
    } catch (const PriorDegenerate&) {
      throw;
    } catch (const std::exception& e) {
      throw ChainAborted(it, e.what());
    }
    if (it >= cc.burn_in && (it - cc.burn_in + 1) % cc.thin == 0) chain.draws.push_back(state);
  }
  return chain;
}

}  // namespace mwcr
