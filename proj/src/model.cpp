// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mwcr/error.hpp"

namespace mwcr {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
  }
}

void require_time(double t) {
  if (!(t >= 0.0) || std::isnan(t)) throw DomainError("time must be nonnegative, got " + std::to_string(t));
}

// (t / alpha)^beta computed through logs so tiny beta and huge t stay stable.
double scaled_power(double t, const RiskParams& p) {
  if (t == 0.0) return 0.0;
  return std::exp(p.beta() * (std::log(t) - std::log(p.alpha())));
}

}  // namespace

RiskParams::RiskParams(double lambda, double alpha, double beta)
    : lambda_(lambda), alpha_(alpha), beta_(beta) {
  require_positive(lambda, "lambda");
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
}

std::string_view param_name(Param p) noexcept {
  switch (p) {
    case Param::Lambda1: return "lambda1";
    case Param::Lambda2: return "lambda2";
    case Param::Alpha: return "alpha";
    case Param::Beta: return "beta";
  }
  return "?";
}

ModelParams::ModelParams(double lambda1, double lambda2, double alpha, double beta)
    : values_{lambda1, lambda2, alpha, beta} {
  require_positive(lambda1, "lambda1");
  require_positive(lambda2, "lambda2");
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
}

ModelParams ModelParams::with(Param p, double value) const {
  auto v = values_;
  v[static_cast<int>(p)] = value;
  return ModelParams(v[0], v[1], v[2], v[3]);
}

RiskParams ModelParams::risk(Cause c) const {
  return RiskParams(c == Cause::One ? lambda1() : lambda2(), alpha(), beta());
}

RiskParams ModelParams::pooled() const { return RiskParams(lambda1() + lambda2(), alpha(), beta()); }

double log_survival(double t, const RiskParams& p) {
  require_time(t);
  const double u = scaled_power(t, p);
  if (u > kExpArgLimit) return -std::numeric_limits<double>::infinity();
  // 1 - e^u = -expm1(u) keeps precision for small u.
  return -p.lambda() * p.alpha() * std::expm1(u);
}

double survival(double t, const RiskParams& p) { return std::exp(log_survival(t, p)); }

double cdf(double t, const RiskParams& p) { return -std::expm1(log_survival(t, p)); }

double log_pdf(double t, const RiskParams& p) {
  if (!(t > 0.0)) throw DomainError("pdf requires t > 0, got " + std::to_string(t));
  const double log_ratio = std::log(t) - std::log(p.alpha());
  const double u = std::exp(p.beta() * log_ratio);
  if (u > kExpArgLimit) return -std::numeric_limits<double>::infinity();
  return std::log(p.lambda()) + std::log(p.beta()) + (p.beta() - 1.0) * log_ratio + u -
         p.lambda() * p.alpha() * std::expm1(u);
}

double pdf(double t, const RiskParams& p) { return std::exp(log_pdf(t, p)); }

double quantile(double u, const RiskParams& p) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile requires 0 < u < 1, got " + std::to_string(u));
  // S(t) = 1 - u  =>  e^{(t/a)^b} = 1 - log(1-u)/(lambda a)  =>  (t/a)^b = log1p(-log1p(-u)/(lambda a))
  const double z = std::log1p(-std::log1p(-u) / (p.lambda() * p.alpha()));
  return p.alpha() * std::pow(z, 1.0 / p.beta());
}

double sample(const RiskParams& p, Rng& rng) { return quantile(rng.uniform_open(), p); }

LatentDraw sample_latent_pair(const ModelParams& mp, Rng& rng) {
  const double x1 = sample(mp.risk(Cause::One), rng);
  const double x2 = sample(mp.risk(Cause::Two), rng);
  if (x1 <= x2) return {x1, Cause::One};
  return {x2, Cause::Two};
}

}  // namespace mwcr
