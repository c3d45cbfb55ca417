// Apache License, Version 2.0, refer to LICENSE.txt

#include <cmath>
#include <vector>

#include <doctest.h>

#include "mwcr/error.hpp"
#include "mwcr/likelihood.hpp"
#include "mwcr/simulate.hpp"
#include "test_support.hpp"

using namespace mwcr;

namespace {

ProgressiveSample mixed_sample() {
  return ProgressiveSample({{0.12, Cause::One, 1},
                            {0.40, Cause::Two, 0},
                            {0.75, Cause::One, 2},
                            {1.30, Cause::One, 0},
                            {2.10, Cause::Two, 3}},
                           11);
}

ProgressiveSample swap_causes(const ProgressiveSample& s) {
  std::vector<Record> recs(s.records().begin(), s.records().end());
  for (Record& r : recs) r.cause = r.cause == Cause::One ? Cause::Two : Cause::One;
  return ProgressiveSample(std::move(recs), s.n());
}

}  // namespace

TEST_CASE("sample construction enforces invariants") {
  CHECK_THROWS_AS(ProgressiveSample({}, 0), DataError);
  CHECK_THROWS_AS(ProgressiveSample({{1.0, Cause::One, 0}, {1.0, Cause::Two, 0}}, 2), DataError);
  CHECK_THROWS_AS(ProgressiveSample({{2.0, Cause::One, 0}, {1.0, Cause::Two, 0}}, 2), DataError);
  CHECK_THROWS_AS(ProgressiveSample({{1.0, Cause::One, -1}}, 0), DataError);
  CHECK_THROWS_AS(ProgressiveSample({{0.0, Cause::One, 0}}, 1), DataError);
  CHECK_THROWS_AS(ProgressiveSample({{1.0, Cause::One, 2}}, 4), DataError);

  const ProgressiveSample s = mixed_sample();
  CHECK(s.m() == 5);
  CHECK(s.m1() == 3);
  CHECK(s.m2() == 2);
  CHECK(s.n() == 11);
  CHECK(s.total_removed() == 6);
}

TEST_CASE("single record equals log f1 + log S2") {
  const ModelParams mp(1.3, 0.7, 0.4, 0.8);
  const ProgressiveSample s({{0.9, Cause::One, 0}}, 1);
  const double expected = std::log(pdf(0.9, mp.risk(Cause::One))) + std::log(survival(0.9, mp.risk(Cause::Two)));
  CHECK(log_likelihood(mp, s) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("evaluated form agrees with the factored form on random samples") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const ProgressiveSample s = testing::random_small_sample(rng, 8);
    const ModelParams mp(0.1 + 2.0 * rng.uniform(), 0.1 + 2.0 * rng.uniform(), 1.0 + 3.0 * rng.uniform(),
                         0.2 + 1.3 * rng.uniform());
    const double evaluated = log_likelihood(mp, s, true);
    const double factored = testing::factored_log_likelihood(mp, s);
    CHECK(std::abs(evaluated - factored) < 1e-8 * std::max(1.0, std::abs(factored)));
  }
}

TEST_CASE("combinatorial constant") {
  // At risk before each failure: 11, 9, 8, 5, 4.
  CHECK(log_combinatorial_constant(mixed_sample()) == doctest::Approx(std::log(11.0 * 9 * 8 * 5 * 4)));
  const ModelParams mp(1.0, 0.5, 1.0, 1.0);
  CHECK(log_likelihood(mp, mixed_sample(), true) - log_likelihood(mp, mixed_sample(), false) ==
        doctest::Approx(std::log(11.0 * 9 * 8 * 5 * 4)));
}

TEST_CASE("swapping causes and rates leaves the likelihood unchanged") {
  const ProgressiveSample s = mixed_sample();
  const ModelParams mp(1.3, 0.2, 0.6, 1.4);
  const ModelParams swapped(0.2, 1.3, 0.6, 1.4);
  CHECK(log_likelihood(mp, s) == doctest::Approx(log_likelihood(swapped, swap_causes(s))).epsilon(1e-14));
}

TEST_CASE("type-II censoring is the general formula with R = (0, ..., 0, n - m)") {
  const ProgressiveSample s({{0.2, Cause::One, 0}, {0.5, Cause::Two, 0}, {0.9, Cause::One, 4}}, 7);
  const ModelParams mp(0.8, 0.4, 0.5, 1.2);
  // By hand: the last failure contributes (R+1) = 5 to the weighted exposure.
  double expected = 2 * std::log(0.8) + std::log(0.4) + 3 * std::log(1.2);
  double weighted = 0.0;
  int k = 0;
  for (double t : {0.2, 0.5, 0.9}) {
    const double u = std::pow(t / 0.5, 1.2);
    expected += u + 0.2 * std::log(t / 0.5);
    weighted += (k == 2 ? 5.0 : 1.0) * (1.0 - std::exp(u));
    ++k;
  }
  expected += 1.2 * 0.5 * weighted;
  CHECK(log_likelihood(mp, s) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("rescaling time changes the log-likelihood by -m log c") {
  // t -> c t, alpha -> c alpha, lambda -> lambda / c leaves (t/alpha)^beta and
  // lambda * alpha alone; the density picks up the Jacobian 1/c per failure.
  const ProgressiveSample s = mixed_sample();
  const ModelParams mp(1.1, 0.4, 0.7, 0.9);
  for (double c : {0.01, 0.5, 3.0, 250.0}) {
    std::vector<Record> recs(s.records().begin(), s.records().end());
    for (Record& r : recs) r.time *= c;
    const ProgressiveSample scaled(std::move(recs), s.n());
    const ModelParams mpc(mp.lambda1() / c, mp.lambda2() / c, mp.alpha() * c, mp.beta());
    CHECK(log_likelihood(mpc, scaled) - log_likelihood(mp, s) ==
          doctest::Approx(-static_cast<double>(s.m()) * std::log(c)).epsilon(1e-9));
  }
}

TEST_CASE("d2 in lambda is exact") {
  const ProgressiveSample s = mixed_sample();
  const ModelParams mp(1.3, 0.7, 0.6, 1.1);
  CHECK(d2_loglik(mp, s, Param::Lambda1, 1e-4) == -3.0 / (1.3 * 1.3));
  CHECK(d2_loglik(mp, s, Param::Lambda2, 1e-4) == -2.0 / (0.7 * 0.7));
  // Against a central difference of the full log-likelihood.
  const double h = 1e-4;
  const double fd = (log_likelihood(mp.with(Param::Lambda1, 1.3 + h), s) - 2.0 * log_likelihood(mp, s) +
                     log_likelihood(mp.with(Param::Lambda1, 1.3 - h), s)) /
                    (h * h);
  CHECK(fd == doctest::Approx(-3.0 / (1.3 * 1.3)).epsilon(1e-4));

  const ProgressiveSample only_one({{0.5, Cause::One, 0}, {0.8, Cause::One, 0}}, 2);
  CHECK(d2_loglik(mp, only_one, Param::Lambda2, 1e-4) == 0.0);
}

TEST_CASE("d2 in beta is stable under step halving") {
  const ProgressiveSample s = generate(catalog_scheme(1, 3));
  const ModelParams truth(1.0, 0.6, 0.3, 0.1);
  double prev = d2_loglik(truth, s, Param::Beta, 4e-4);
  for (double h : {2e-4, 1e-4, 5e-5}) {
    const double cur = d2_loglik(truth, s, Param::Beta, h);
    CHECK(cur == doctest::Approx(prev).epsilon(1e-3));
    prev = cur;
  }
}

TEST_CASE("d2 errors") {
  const ProgressiveSample s = mixed_sample();
  const ModelParams mp(1.0, 1.0, 0.3, 0.1);
  CHECK_THROWS_AS(d2_loglik(mp, s, Param::Beta, 0.05), NumericError);
  CHECK_THROWS_AS(d2_loglik(mp, s, Param::Alpha, 0.2), NumericError);
  const ModelParams overflow(1.0, 1.0, 1e-3, 5.0);
  CHECK_THROWS_AS(d2_loglik(overflow, s, Param::Beta, 1e-4), NumericError);
}

TEST_CASE("log-likelihood is concave in lambda1 when cause 1 is observed") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ProgressiveSample s = testing::random_small_sample(rng, 8);
    if (s.m1() == 0) continue;
    const ModelParams mp(0.1 + rng.uniform(), 0.1 + rng.uniform(), 0.5 + rng.uniform(), 0.5 + rng.uniform());
    CHECK(d2_loglik(mp, s, Param::Lambda1, 1e-4) < 0.0);
  }
}

TEST_CASE("overflowing exponent yields -inf") {
  const ProgressiveSample s({{100.0, Cause::One, 0}, {200.0, Cause::Two, 0}}, 2);
  const ModelParams mp(1.0, 1.0, 1.0, 3.0);
  CHECK(log_likelihood(mp, s) == -std::numeric_limits<double>::infinity());
}
