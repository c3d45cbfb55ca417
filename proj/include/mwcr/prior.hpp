// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <optional>

#include "mwcr/likelihood.hpp"

namespace mwcr {

/// One Gibbs conditional: the coordinate being updated, the frozen values of
/// the other three (taken from `frozen`; its `which` coordinate is ignored),
/// and the data.
struct ConditionalTarget {
  Param which;
  ModelParams frozen;
  const ProgressiveSample* data;

  ConditionalTarget(Param which_, ModelParams frozen_, const ProgressiveSample& data_)
      : which(which_), frozen(frozen_), data(&data_) {}

  ModelParams at(double value) const { return frozen.with(which, value); }
};

/// Log of the conditional reference prior, up to an additive constant:
/// 0.5 * log(-d2 l / d theta^2) with the other coordinates frozen.
///
/// For lambda_j this is exactly -log(lambda_j) (the constant 0.5 log m_j is
/// dropped). For alpha and beta the second derivative is a central
/// difference with step default_fd_step(value).
///
/// Throws PriorDegenerate if the cause belonging to lambda_j was never
/// observed, InformationNonpositive if -d2 <= 0, DomainError for value <= 0.
double log_conditional_prior(const ConditionalTarget& ct, double value);

/// log_likelihood(include_constant = false) + log_conditional_prior. A
/// likelihood of -inf propagates as -inf.
double log_conditional_posterior(const ConditionalTarget& ct, double value);

/// Why a conditional log-density could not be evaluated to a finite number.
enum class EvalStatus { Ok, NonpositiveInformation, OutsideSupport };

struct ConditionalEval {
  double log_density;  // -inf unless status == Ok
  EvalStatus status;
};

/// Non-throwing form used in the sampler's inner loop. Nonpositive
/// information, a finite-difference step leaving the positive axis and
/// non-finite intermediate values all map to log-density -inf with a
/// status code. Still throws PriorDegenerate, which is a property of the data
/// rather than of the evaluation point.
ConditionalEval evaluate_conditional_posterior(const ConditionalTarget& ct, double value);

/// Throws PriorDegenerate unless both causes have at least one failure.
void require_both_causes(const ProgressiveSample& s);

}  // namespace mwcr
