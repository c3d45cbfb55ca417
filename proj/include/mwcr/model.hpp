// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <array>
#include <string_view>

#include "mwcr/rng.hpp"

namespace mwcr {

/// Parameters of one modified Weibull lifetime
///
///   F(t) = 1 - exp{ lambda * alpha * (1 - exp((t / alpha)^beta)) }.
///
/// lambda is a rate (1/time), alpha a time scale, beta a dimensionless shape.
/// All three must be strictly positive and finite.
class RiskParams {
 public:
  RiskParams(double lambda, double alpha, double beta);

  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double lambda_;
  double alpha_;
  double beta_;
};

enum class Cause { One = 1, Two = 2 };

enum class Param { Lambda1 = 0, Lambda2 = 1, Alpha = 2, Beta = 3 };

inline constexpr std::array<Param, 4> kAllParams{Param::Lambda1, Param::Lambda2, Param::Alpha,
                                                 Param::Beta};

std::string_view param_name(Param p) noexcept;

/// The two-cause state (lambda1, lambda2, alpha, beta); both causes share
/// the time scale alpha and shape beta.
class ModelParams {
 public:
  ModelParams(double lambda1, double lambda2, double alpha, double beta);

  double lambda1() const noexcept { return values_[0]; }
  double lambda2() const noexcept { return values_[1]; }
  double alpha() const noexcept { return values_[2]; }
  double beta() const noexcept { return values_[3]; }

  double get(Param p) const noexcept { return values_[static_cast<int>(p)]; }
  /// Copy with one coordinate replaced; validates the new value.
  ModelParams with(Param p, double value) const;

  RiskParams risk(Cause c) const;
  /// Distribution of min(X1, X2): rate lambda1 + lambda2.
  RiskParams pooled() const;

  const std::array<double, 4>& values() const noexcept { return values_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  std::array<double, 4> values_;
};

// Exponents (t/alpha)^beta above this are clamped: exp() would overflow, so
// survival is reported as exactly 0.
inline constexpr double kExpArgLimit = 700.0;

double cdf(double t, const RiskParams& p);
double survival(double t, const RiskParams& p);
/// log S(t) = lambda * alpha * (1 - exp((t/alpha)^beta)); -inf when clamped.
double log_survival(double t, const RiskParams& p);

/// Density, t > 0:
///   f(t) = lambda * beta * (t/alpha)^(beta-1) * exp((t/alpha)^beta) * S(t).
/// Differentiating F directly gives lambda*alpha * (beta/alpha) * ..., so the
/// time scale cancels out of the leading factor.
double pdf(double t, const RiskParams& p);
double log_pdf(double t, const RiskParams& p);

/// Inverse CDF, 0 < u < 1:
///   t = alpha * [ log(1 - log(1 - u) / (lambda * alpha)) ]^(1/beta).
double quantile(double u, const RiskParams& p);

double sample(const RiskParams& p, Rng& rng);

struct LatentDraw {
  double time;
  Cause cause;
};

/// Draws X1 ~ F_1 and X2 ~ F_2 independently and returns min and argmin.
/// Ties go to cause 1.
LatentDraw sample_latent_pair(const ModelParams& mp, Rng& rng);

}  // namespace mwcr
