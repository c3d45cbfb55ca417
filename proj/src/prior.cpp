// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/prior.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mwcr/error.hpp"

namespace mwcr {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_cause_observed(const ConditionalTarget& ct) {
  if (ct.which == Param::Lambda1 && ct.data->m1() == 0) {
    throw PriorDegenerate("no cause-1 failures, lambda1 carries zero information");
  }
  if (ct.which == Param::Lambda2 && ct.data->m2() == 0) {
    throw PriorDegenerate("no cause-2 failures, lambda2 carries zero information");
  }
}

void require_value(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("conditional evaluation point must be positive, got " + std::to_string(value));
  }
}

struct ShapeTerms {
  double log_lik;
  double log_prior;
  EvalStatus status;
};

// Log-likelihood and finite-difference log-prior for alpha or beta, sharing
// the centre evaluation between the two.
ShapeTerms shape_terms(const ConditionalTarget& ct, double value) {
  const ModelParams mp = ct.at(value);
  const double h = default_fd_step(value);
  if (!(value - 2.0 * h > 0.0)) return {kNegInf, kNegInf, EvalStatus::OutsideSupport};
  const double mid = log_likelihood(mp, *ct.data);
  if (!std::isfinite(mid)) return {kNegInf, kNegInf, EvalStatus::OutsideSupport};
  const double lo = log_likelihood(ct.at(value - h), *ct.data);
  const double hi = log_likelihood(ct.at(value + h), *ct.data);
  const double d2 = (hi - 2.0 * mid + lo) / (h * h);
  if (!std::isfinite(d2)) return {mid, kNegInf, EvalStatus::OutsideSupport};
  if (!(-d2 > 0.0)) return {mid, kNegInf, EvalStatus::NonpositiveInformation};
  return {mid, 0.5 * std::log(-d2), EvalStatus::Ok};
}

}  // namespace

void require_both_causes(const ProgressiveSample& s) {
  if (s.m1() == 0) throw PriorDegenerate("no cause-1 failures, lambda1 carries zero information");
  if (s.m2() == 0) throw PriorDegenerate("no cause-2 failures, lambda2 carries zero information");
}

double log_conditional_prior(const ConditionalTarget& ct, double value) {
  require_value(value);
  require_cause_observed(ct);
  switch (ct.which) {
    case Param::Lambda1:
    case Param::Lambda2:
      return -std::log(value);
    case Param::Alpha:
    case Param::Beta:
      break;
  }
  const ShapeTerms t = shape_terms(ct, value);
  switch (t.status) {
    case EvalStatus::Ok:
      return t.log_prior;
    case EvalStatus::NonpositiveInformation:
      throw InformationNonpositive(std::string(param_name(ct.which)) + "=" + std::to_string(value));
    case EvalStatus::OutsideSupport:
      break;
  }
  throw NumericError("second difference for " + std::string(param_name(ct.which)) +
                     " could not be evaluated at " + std::to_string(value));
}

double log_conditional_posterior(const ConditionalTarget& ct, double value) {
  require_value(value);
  require_cause_observed(ct);
  if (ct.which == Param::Lambda1 || ct.which == Param::Lambda2) {
    return log_likelihood(ct.at(value), *ct.data) - std::log(value);
  }
  const ShapeTerms t = shape_terms(ct, value);
  if (t.status == EvalStatus::Ok) return t.log_lik + t.log_prior;
  if (!std::isfinite(t.log_lik)) return kNegInf;
  return log_conditional_prior(ct, value);  // rethrows with a specific message
}

ConditionalEval evaluate_conditional_posterior(const ConditionalTarget& ct, double value) {
  require_cause_observed(ct);
  if (!(value > 0.0) || !std::isfinite(value)) return {kNegInf, EvalStatus::OutsideSupport};
  if (ct.which == Param::Lambda1 || ct.which == Param::Lambda2) {
    const double ll = log_likelihood(ct.at(value), *ct.data);
    if (!std::isfinite(ll)) return {kNegInf, EvalStatus::OutsideSupport};
    return {ll - std::log(value), EvalStatus::Ok};
  }
  const ShapeTerms t = shape_terms(ct, value);
  if (t.status != EvalStatus::Ok) return {kNegInf, t.status};
  const double lp = t.log_lik + t.log_prior;
  if (!std::isfinite(lp)) return {kNegInf, EvalStatus::OutsideSupport};
  return {lp, EvalStatus::Ok};
}

}  // namespace mwcr
