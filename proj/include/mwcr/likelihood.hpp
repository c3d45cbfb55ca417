// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <span>
#include <vector>

#include "mwcr/model.hpp"

namespace mwcr {

/// One observed failure: time, cause, and the number of surviving units
/// withdrawn at that failure.
struct Record {
  double time;
  Cause cause;
  long removed;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Progressively Type-II censored competing-risks sample.
///
/// Invariants checked at construction: at least one record, times positive
/// and strictly increasing, removals nonnegative, and n = m + sum(R_i).
class ProgressiveSample {
 public:
  ProgressiveSample(std::vector<Record> records, long n);

  /// Builds a sample whose cohort size is implied by the removal counts.
  static ProgressiveSample from_records(std::vector<Record> records);

  std::span<const Record> records() const noexcept { return records_; }
  long n() const noexcept { return n_; }
  long m() const noexcept { return static_cast<long>(records_.size()); }
  long m1() const noexcept { return m1_; }
  long m2() const noexcept { return m() - m1_; }
  long total_removed() const noexcept { return n_ - m(); }
  double mean_time() const noexcept { return mean_time_; }

  /// log t_i, cached for likelihood evaluation.
  std::span<const double> log_times() const noexcept { return log_times_; }

  friend bool operator==(const ProgressiveSample& a, const ProgressiveSample& b) {
    return a.n_ == b.n_ && a.records_ == b.records_;
  }

 private:
  std::vector<Record> records_;
  std::vector<double> log_times_;
  long n_;
  long m1_ = 0;
  double mean_time_ = 0.0;
};

/// log of n (n - R_1 - 1) ... (n - R_1 - ... - R_{m-1} - m + 1).
double log_combinatorial_constant(const ProgressiveSample& s);

/// Log-likelihood in evaluated form:
///
///   m1 log l1 + m2 log l2 + m log b + sum u_i + (b - 1) sum log(t_i/a)
///     + (l1 + l2) a sum (R_i + 1)(1 - e^{u_i}),      u_i = (t_i / a)^b.
///
/// Returns -inf when some u_i exceeds the overflow clamp.
double log_likelihood(const ModelParams& mp, const ProgressiveSample& s, bool include_constant = false);

/// The quantity -a * sum (R_i + 1)(1 - e^{u_i}) > 0: the rate shared by the
/// Gamma full conditionals of lambda1 and lambda2 under the 1/lambda prior.
double exposure(const ProgressiveSample& s, double alpha, double beta);

/// Second partial derivative of the log-likelihood in one coordinate.
///
/// Exact for lambda1 (-m1/l1^2) and lambda2 (-m2/l2^2). For alpha and beta a
/// central second difference with step h is used; the parameter minus 2h must
/// stay positive.
double d2_loglik(const ModelParams& mp, const ProgressiveSample& s, Param which, double h);

/// Central-difference step used for alpha and beta: max(1e-5, 1e-4 * value).
double default_fd_step(double value) noexcept;

}  // namespace mwcr
