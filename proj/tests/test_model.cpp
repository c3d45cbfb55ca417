// Apache License, Version 2.0, refer to LICENSE.txt

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "mwcr/error.hpp"
#include "mwcr/model.hpp"
#include "test_support.hpp"

using namespace mwcr;

namespace {

const std::vector<RiskParams> kTriples{
    RiskParams(1.0, 1.0, 1.0), RiskParams(1.0, 0.3, 0.1), RiskParams(1.6, 0.3, 0.1),
    RiskParams(0.034, 30.228, 0.536), RiskParams(2.5, 0.7, 3.0)};

}  // namespace

TEST_CASE("construction rejects nonpositive parameters") {
  CHECK_THROWS_AS(RiskParams(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(RiskParams(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(RiskParams(1.0, 1.0, std::nan("")), DomainError);
  // lambda2 = 0 would make the second cause degenerate.
  CHECK_THROWS_AS(ModelParams(1.0, 0.0, 0.3, 0.1), DomainError);
  const ModelParams mp(1.0, 0.6, 0.3, 0.1);
  CHECK(mp.risk(Cause::Two).lambda() == 0.6);
  CHECK(mp.risk(Cause::Two).alpha() == 0.3);
  CHECK(mp.pooled().lambda() == doctest::Approx(1.6));
  CHECK_THROWS_AS(mp.with(Param::Beta, 0.0), DomainError);
}

TEST_CASE("cdf boundary values") {
  for (const RiskParams& p : kTriples) CHECK(cdf(0.0, p) == 0.0);
  const RiskParams unit(1.0, 1.0, 1.0);
  CHECK(cdf(1e6, unit) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(cdf(-1.0, unit), DomainError);
  CHECK_THROWS_AS(survival(-1e-9, unit), DomainError);
}

TEST_CASE("cdf and survival at t=1 against high-precision arithmetic") {
  // 1 - e^{1-e} evaluated with 40-digit arithmetic.
  const RiskParams unit(1.0, 1.0, 1.0);
  CHECK(cdf(1.0, unit) == doctest::Approx(0.82062592126598281803801).epsilon(1e-15));
  CHECK(survival(1.0, unit) == doctest::Approx(0.17937407873401718196199).epsilon(1e-15));
}

TEST_CASE("survival and cdf are complementary; cdf monotone") {
  for (const RiskParams& p : kTriples) {
    double prev = 0.0;
    for (double t = 1e-6; t < 1e4; t *= 1.37) {
      CHECK(survival(t, p) + cdf(t, p) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(cdf(t, p) >= prev);
      prev = cdf(t, p);
    }
  }
}

TEST_CASE("survival is closed under minima for shared alpha, beta") {
  const RiskParams a(1.0, 0.3, 0.1);
  const RiskParams b(0.6, 0.3, 0.1);
  const RiskParams ab(1.6, 0.3, 0.1);
  for (double t : {0.0, 1e-8, 1e-3, 0.1, 0.3, 1.0, 10.0, 1e3}) {
    CHECK(survival(t, a) * survival(t, b) == doctest::Approx(survival(t, ab)).epsilon(1e-12));
  }
}

TEST_CASE("survival overflow clamp") {
  const RiskParams steep(1.0, 1.0, 20.0);
  CHECK(survival(1e20, steep) == 0.0);
  CHECK(cdf(1e20, steep) == 1.0);
  CHECK(std::isinf(log_survival(1e20, steep)));
}

TEST_CASE("pdf domain and limit at zero") {
  const RiskParams exp_like(2.5, 0.7, 1.0);
  CHECK(pdf(1e-12, exp_like) == doctest::Approx(2.5).epsilon(1e-9));
  CHECK_THROWS_AS(pdf(0.0, exp_like), DomainError);
  CHECK_THROWS_AS(pdf(-1.0, exp_like), DomainError);
  CHECK(pdf(1e-12, RiskParams(1.0, 1.0, 2.0)) < 1e-10);
  CHECK(pdf(1e-12, RiskParams(1.0, 1.0, 0.5)) > 1e4);
}

TEST_CASE("pdf integrates to one") {
  // Integrate f(e^s) e^s over s: the beta = 0.1 mass spans dozens of decades.
  using boost::math::quadrature::gauss_kronrod;
  for (const RiskParams& p : {RiskParams(1.0, 0.3, 0.1), RiskParams(1.0, 1.0, 1.0), RiskParams(0.034, 30.228, 0.536)}) {
    auto integrand = [&](double s) {
      const double t = std::exp(s);
      return pdf(t, p) * t;
    };
    double total = 0.0;
    for (double lo = -400.0; lo < 80.0; lo += 20.0) {
      total += gauss_kronrod<double, 61>::integrate(integrand, lo, lo + 20.0, 15, 1e-14);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("pdf matches the central difference of survival") {
  for (const RiskParams& p : kTriples) {
    for (double t = 0.1; t <= 5.0 + 1e-9; t += 0.1) {
      const double h = 1e-5 * t;
      const double hazard = (log_survival(t - h, p) - log_survival(t + h, p)) / (2.0 * h);
      const double numeric = hazard * survival(t, p);
      if (numeric < 1e-200) continue;  // both underflow far in the tail
      CHECK(pdf(t, p) / numeric == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("quantile inverts cdf") {
  for (const RiskParams& p : kTriples) {
    for (double u = 0.01; u < 0.995; u += 0.01) {
      CHECK(std::abs(cdf(quantile(u, p), p) - u) < 1e-10);
    }
  }
  const RiskParams p(1.0, 0.3, 0.1);
  CHECK(quantile(1e-12, p) < quantile(1e-6, p));
  CHECK(quantile(1e-12, p) < 1e-100);
  CHECK_THROWS_AS(quantile(0.0, p), DomainError);
  CHECK_THROWS_AS(quantile(1.0, p), DomainError);
}

TEST_CASE("median of simulated draws matches quantile(0.5)") {
  const RiskParams p(1.0, 1.0, 1.0);
  Rng rng(99);
  const int n = 100000;
  std::vector<double> xs(n);
  for (double& x : xs) x = sample(p, rng);
  std::nth_element(xs.begin(), xs.begin() + n / 2, xs.end());
  const double med = quantile(0.5, p);
  // Asymptotic standard error of a sample median: 1 / (2 f(med) sqrt(n)).
  const double se = 1.0 / (2.0 * pdf(med, p) * std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(xs[n / 2] - med) < 2.0 * se);
}

TEST_CASE("latent pair: cause probabilities and min distribution") {
  const int n = 10000;
  for (const ModelParams& mp :
       {ModelParams(1.0, 0.6, 0.3, 0.1), ModelParams(1.0, 1.0, 0.3, 0.1), ModelParams(0.5, 2.0, 1.5, 2.0)}) {
    Rng rng(2024);
    std::vector<double> times;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      const LatentDraw d = sample_latent_pair(mp, rng);
      times.push_back(d.time);
      ones += d.cause == Cause::One;
    }
    // Hazards are proportional in lambda, so P(cause 1) = l1 / (l1 + l2).
    const double p1 = mp.lambda1() / (mp.lambda1() + mp.lambda2());
    const double sigma = std::sqrt(p1 * (1.0 - p1) / n);
    CHECK(std::abs(ones / static_cast<double>(n) - p1) < 3.0 * sigma);
    const RiskParams pooled = mp.pooled();
    CHECK(testing::ks_distance(times, [&](double t) { return cdf(t, pooled); }) < 0.02);
  }
}

TEST_CASE("latent pair is deterministic per seed") {
  const ModelParams mp(1.0, 0.6, 0.3, 0.1);
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) {
    const LatentDraw x = sample_latent_pair(mp, a);
    const LatentDraw y = sample_latent_pair(mp, b);
    CHECK(x.time == y.time);
    CHECK(x.cause == y.cause);
  }
}
