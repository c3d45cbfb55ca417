// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mwcr/error.hpp"

namespace mwcr {

ProgressiveSample::ProgressiveSample(std::vector<Record> records, long n)
    : records_(std::move(records)), n_(n) {
  if (records_.empty()) throw DataError("empty sample: at least one failure is required");
  long removed = 0;
  double sum = 0.0;
  log_times_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    if (!(r.time > 0.0) || !std::isfinite(r.time)) {
      throw DataError("record " + std::to_string(i + 1) + ": time must be positive and finite");
    }
    if (r.removed < 0) throw DataError("record " + std::to_string(i + 1) + ": negative removal count");
    if (r.cause != Cause::One && r.cause != Cause::Two) {
      throw DataError("record " + std::to_string(i + 1) + ": cause must be 1 or 2");
    }
    if (i > 0 && !(r.time > records_[i - 1].time)) {
      throw DataError("record " + std::to_string(i + 1) +
                      ": failure times must be strictly increasing (tie or disorder)");
    }
    removed += r.removed;
    sum += r.time;
    if (r.cause == Cause::One) ++m1_;
    log_times_.push_back(std::log(r.time));
  }
  if (n_ != m() + removed) {
    throw DataError("accounting identity violated: n=" + std::to_string(n_) + " but m + sum(R)=" +
                    std::to_string(m() + removed));
  }
  mean_time_ = sum / static_cast<double>(m());
}

ProgressiveSample ProgressiveSample::from_records(std::vector<Record> records) {
  long n = static_cast<long>(records.size());
  for (const Record& r : records) n += std::max(0L, r.removed);
  return ProgressiveSample(std::move(records), n);
}

double log_combinatorial_constant(const ProgressiveSample& s) {
  double acc = 0.0;
  long at_risk = s.n();
  for (const Record& r : s.records()) {
    acc += std::log(static_cast<double>(at_risk));
    at_risk -= r.removed + 1;
  }
  return acc;
}

double exposure(const ProgressiveSample& s, double alpha, double beta) {
  const double log_alpha = std::log(alpha);
  const auto recs = s.records();
  const auto logt = s.log_times();
  double acc = 0.0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const double u = std::exp(beta * (logt[i] - log_alpha));
    if (u > kExpArgLimit) return std::numeric_limits<double>::infinity();
    acc += static_cast<double>(recs[i].removed + 1) * std::expm1(u);
  }
  return alpha * acc;
}

double log_likelihood(const ModelParams& mp, const ProgressiveSample& s, bool include_constant) {
  const double log_alpha = std::log(mp.alpha());
  const double beta = mp.beta();
  const auto recs = s.records();
  const auto logt = s.log_times();

  double sum_u = 0.0;
  double sum_log_ratio = 0.0;
  double sum_weighted = 0.0;  // sum (R_i + 1)(e^{u_i} - 1)
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const double log_ratio = logt[i] - log_alpha;
    const double u = std::exp(beta * log_ratio);
    if (u > kExpArgLimit) return -std::numeric_limits<double>::infinity();
    sum_u += u;
    sum_log_ratio += log_ratio;
    sum_weighted += static_cast<double>(recs[i].removed + 1) * std::expm1(u);
  }

  const auto m = static_cast<double>(s.m());
  double ll = static_cast<double>(s.m1()) * std::log(mp.lambda1()) +
              static_cast<double>(s.m2()) * std::log(mp.lambda2()) + m * std::log(beta) + sum_u +
              (beta - 1.0) * sum_log_ratio - (mp.lambda1() + mp.lambda2()) * mp.alpha() * sum_weighted;
  if (include_constant) ll += log_combinatorial_constant(s);
  return ll;
}

double default_fd_step(double value) noexcept { return std::max(1e-5, 1e-4 * value); }

double d2_loglik(const ModelParams& mp, const ProgressiveSample& s, Param which, double h) {
  switch (which) {
    case Param::Lambda1:
      return -static_cast<double>(s.m1()) / (mp.lambda1() * mp.lambda1());
    case Param::Lambda2:
      return -static_cast<double>(s.m2()) / (mp.lambda2() * mp.lambda2());
    case Param::Alpha:
    case Param::Beta:
      break;
  }
  const double theta = mp.get(which);
  if (!(h > 0.0)) throw NumericError("finite-difference step must be positive");
  if (!(theta - 2.0 * h > 0.0)) {
    throw NumericError("finite-difference step too large: " + std::string(param_name(which)) + "=" +
                       std::to_string(theta) + ", h=" + std::to_string(h));
  }
  const double lo = log_likelihood(mp.with(which, theta - h), s);
  const double mid = log_likelihood(mp, s);
  const double hi = log_likelihood(mp.with(which, theta + h), s);
  const double d2 = (hi - 2.0 * mid + lo) / (h * h);
  if (!std::isfinite(d2)) {
    throw NumericError("non-finite second difference in " + std::string(param_name(which)));
  }
  return d2;
}

}  // namespace mwcr
