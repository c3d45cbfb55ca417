// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

#include "mwcr/error.hpp"
#include "mwcr/rng.hpp"

namespace mwcr {

struct SliceConfig {
  double width = 1.0;  // initial bracket, on the log-parameter axis
  int max_stepout = 50;
  int max_shrink = 100;

  void validate() const {
    if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("slice width must be positive");
    if (max_stepout < 1) throw DomainError("max_stepout must be >= 1");
    if (max_shrink < 1) throw DomainError("max_shrink must be >= 1");
  }
};

/// Counters accumulated across slice updates of one coordinate.
struct SliceStats {
  std::uint64_t updates = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t stepouts = 0;
  std::uint64_t shrinks = 0;
  std::uint64_t exhausted = 0;  // shrinkage ran out; current point kept

  SliceStats& operator+=(const SliceStats& o) {
    updates += o.updates;
    evaluations += o.evaluations;
    stepouts += o.stepouts;
    shrinks += o.shrinks;
    exhausted += o.exhausted;
    return *this;
  }
};

namespace detail {

template <typename LogDensity>
auto log_axis_target(LogDensity& log_density, SliceStats& stats) {
  return [&log_density, &stats](double y) {
    ++stats.evaluations;
    const double x = std::exp(y);
    if (!(x > 0.0) || !std::isfinite(x)) return -std::numeric_limits<double>::infinity();
    const double v = log_density(x);
    if (std::isnan(v)) return -std::numeric_limits<double>::infinity();
    return v + y;
  };
}

// Step-out and shrinkage from y0, whose log-axis density g0 is finite.
template <typename Target>
double slice_from(Target& target, double y0, double g0, const SliceConfig& cfg, Rng& rng, SliceStats& stats) {
  ++stats.updates;
  const double level = g0 - rng.exponential();

  double left = y0 - cfg.width * rng.uniform();
  double right = left + cfg.width;
  auto left_steps = static_cast<int>(std::floor(cfg.max_stepout * rng.uniform()));
  int right_steps = cfg.max_stepout - 1 - left_steps;
  while (left_steps > 0 && target(left) > level) {
    left -= cfg.width;
    --left_steps;
    ++stats.stepouts;
  }
  while (right_steps > 0 && target(right) > level) {
    right += cfg.width;
    --right_steps;
    ++stats.stepouts;
  }

  for (int i = 0; i < cfg.max_shrink; ++i) {
    const double y1 = left + rng.uniform() * (right - left);
    if (target(y1) >= level) return std::exp(y1);
    ++stats.shrinks;
    if (y1 < y0) {
      left = y1;
    } else {
      right = y1;
    }
  }
  ++stats.exhausted;
  return std::exp(y0);
}

}  // namespace detail

/// One slice-sampling update (step-out and shrinkage) of a positive scalar.
///
/// `log_density` is the unnormalized log-density on x > 0. The walk happens
/// on y = log x with target log_density(e^y) + y, so every proposal is
/// positive. NaN is treated as -inf. If shrinkage does not find an
/// acceptable point within max_shrink proposals, x0 is returned and
/// `stats.exhausted` is incremented.
template <typename LogDensity>
  requires std::invocable<LogDensity&, double>
double slice_step(LogDensity&& log_density, double x0, const SliceConfig& cfg, Rng& rng,
                  SliceStats& stats) {
  auto target = detail::log_axis_target(log_density, stats);
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw NumericError("invalid current point: x0=" + std::to_string(x0) + " is not positive");
  }
  const double y0 = std::log(x0);
  const double g0 = target(y0);
  if (!std::isfinite(g0)) {
    throw NumericError("invalid current point: log-density at x0=" + std::to_string(x0) + " is not finite");
  }
  return detail::slice_from(target, y0, g0, cfg, rng, stats);
}

/// Like slice_step, but a current point with zero density is first replaced
/// by a uniform draw on the log axis from a bracket of half-width
/// width * 2^k around it, with k growing every 10 attempts, until a point of
/// positive density is found; that point then gets an ordinary slice update.
/// Returns the new value; `reentered` reports whether the fallback ran.
/// Throws NumericError after max_shrink failed attempts.
template <typename LogDensity>
  requires std::invocable<LogDensity&, double>
double slice_step_reentrant(LogDensity&& log_density, double x0, const SliceConfig& cfg, Rng& rng,
                            SliceStats& stats, bool& reentered) {
  auto target = detail::log_axis_target(log_density, stats);
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw NumericError("invalid current point: x0=" + std::to_string(x0) + " is not positive");
  }
  double y0 = std::log(x0);
  double g0 = target(y0);
  reentered = false;
  if (!std::isfinite(g0)) {
    reentered = true;
    const double centre = y0;
    for (int i = 0;; ++i) {
      if (i >= cfg.max_shrink) {
        throw NumericError("invalid current point: no positive-density point found near x0=" +
                           std::to_string(x0));
      }
      const double half = cfg.width * std::ldexp(1.0, i / 10);
      y0 = centre + half * (2.0 * rng.uniform() - 1.0);
      g0 = target(y0);
      if (std::isfinite(g0)) break;
    }
  }
  return detail::slice_from(target, y0, g0, cfg, rng, stats);
}

}  // namespace mwcr
