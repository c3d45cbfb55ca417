// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/posterior.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "mwcr/error.hpp"

namespace mwcr {

double sample_mean(std::span<const double> samples) {
  if (samples.empty()) throw DataError("mean of an empty chain");
  double acc = 0.0;
  for (double v : samples) acc += v;
  return acc / static_cast<double>(samples.size());
}

double bayes_mean(const Chain& chain, Param which) {
  if (chain.draws.empty()) throw DataError("mean of an empty chain");
  double acc = 0.0;
  for (const ModelParams& d : chain.draws) acc += d.get(which);
  return acc / static_cast<double>(chain.draws.size());
}

double sample_median(std::span<const double> samples) {
  if (samples.empty()) throw DataError("median of an empty chain");
  std::vector<double> v(samples.begin(), samples.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

std::size_t hpd_window_size(std::size_t m, double gamma) {
  // The small slack absorbs representation error in M * (1 - gamma) when
  // M * gamma is meant to be integral (e.g. 100 * 0.9).
  const double raw = static_cast<double>(m) * (1.0 - gamma);
  auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
  return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(m, 1));
}

HpdInterval hpd_interval(std::span<const double> samples, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in (0, 1)");
  if (samples.empty()) throw DataError("HPD interval of an empty chain");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  if (m < 2 || static_cast<double>(m) * gamma < 1.0) return {sorted.front(), sorted.back(), true};

  const std::size_t k = hpd_window_size(m, gamma);
  std::size_t best = 0;
  double best_width = sorted[k - 1] - sorted[0];
  for (std::size_t j = 1; j + k <= m; ++j) {
    const double w = sorted[j + k - 1] - sorted[j];
    if (w < best_width) {
      best_width = w;
      best = j;
    }
  }
  return {sorted[best], sorted[best + k - 1], false};
}

PosteriorSummary summarize(std::span<const ModelParams> draws, double gamma) {
  if (draws.empty()) throw DataError("cannot summarize an empty chain");
  PosteriorSummary out{gamma, draws.size(), {}};
  std::vector<double> col(draws.size());
  for (Param p : kAllParams) {
    std::transform(draws.begin(), draws.end(), col.begin(), [p](const ModelParams& d) { return d.get(p); });
    out.params[static_cast<std::size_t>(p)] = {p, sample_mean(col), sample_median(col), hpd_interval(col, gamma)};
  }
  return out;
}

PosteriorSummary summarize(const Chain& chain, double gamma) { return summarize(chain.draws, gamma); }

std::string to_table(const PosteriorSummary& s) {
  std::string out = fmt::format("{:<10} {:>14} {:>14} {:>14} {:>14}\n", "parameter", "mean", "median",
                                "hpd_lower", "hpd_upper");
  for (const ParamSummary& p : s.params) {
    out += fmt::format("{:<10} {:>14.6g} {:>14.6g} {:>14.6g} {:>14.6g}\n", param_name(p.param), p.mean,
                       p.median, p.hpd.lower, p.hpd.upper);
  }
  out += fmt::format("draws={} level={:g}%", s.draws, 100.0 * (1.0 - s.gamma));
  if (std::any_of(s.params.begin(), s.params.end(), [](const ParamSummary& p) { return p.hpd.degenerate; })) {
    out += " (HPD degenerate: too few draws for this gamma)";
  }
  out += '\n';
  return out;
}

std::string to_json(const PosteriorSummary& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ParamSummary& p : s.params) {
    arr.push_back({{"name", std::string(param_name(p.param))},
                   {"mean", p.mean},
                   {"median", p.median},
                   {"hpd_lower", p.hpd.lower},
                   {"hpd_upper", p.hpd.upper},
                   {"gamma", s.gamma}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace mwcr
