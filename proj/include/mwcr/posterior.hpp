// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mwcr/gibbs.hpp"

namespace mwcr {

struct HpdInterval {
  double lower;
  double upper;
  // Fewer than two samples or M*gamma < 1: the full sample range is returned.
  bool degenerate = false;
};

double bayes_mean(const Chain& chain, Param which);
double sample_mean(std::span<const double> samples);

/// Median; the average of the two middle order statistics for even sizes.
double sample_median(std::span<const double> samples);

/// Number of consecutive order statistics in the HPD window:
/// ceil(M * (1 - gamma)), clamped to [1, M].
std::size_t hpd_window_size(std::size_t m, double gamma);

/// Narrowest window of hpd_window_size consecutive order statistics; the
/// leftmost window wins ties. Throws DomainError unless 0 < gamma < 1 and
/// DataError on an empty sample.
HpdInterval hpd_interval(std::span<const double> samples, double gamma);

struct ParamSummary {
  Param param;
  double mean;
  double median;
  HpdInterval hpd;
};

struct PosteriorSummary {
  double gamma;
  std::size_t draws;
  std::array<ParamSummary, 4> params;

  const ParamSummary& operator[](Param p) const { return params[static_cast<std::size_t>(p)]; }
};

PosteriorSummary summarize(const Chain& chain, double gamma);
PosteriorSummary summarize(std::span<const ModelParams> draws, double gamma);

/// Fixed-width text table, one row per parameter.
std::string to_table(const PosteriorSummary& s);

/// JSON array of {name, mean, median, hpd_lower, hpd_upper, gamma}.
std::string to_json(const PosteriorSummary& s);

}  // namespace mwcr
