// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mwcr/error.hpp"

namespace mwcr {

CensoringScheme::CensoringScheme(long n, std::vector<long> removals) : n_(n), removals_(std::move(removals)) {
  if (removals_.empty()) throw DomainError("censoring scheme needs at least one failure");
  if (std::any_of(removals_.begin(), removals_.end(), [](long r) { return r < 0; })) {
    throw DomainError("removal counts must be nonnegative");
  }
  const long total = std::accumulate(removals_.begin(), removals_.end(), 0L);
  if (m() + total != n_) {
    throw DomainError("infeasible scheme: m + sum(R) = " + std::to_string(m() + total) + " but n = " +
                      std::to_string(n_));
  }
}

CensoringScheme CensoringScheme::type2(long n, long m) {
  if (m < 1 || m > n) throw DomainError("type-II scheme requires 1 <= m <= n");
  std::vector<long> r(static_cast<std::size_t>(m), 0);
  r.back() = n - m;
  return CensoringScheme(n, std::move(r));
}

CensoringScheme CensoringScheme::spread(long n, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("observed fraction must lie in (0, 1]");
  const auto m = std::max(1L, static_cast<long>(fraction * static_cast<double>(n)));
  const long to_remove = n - m;
  std::vector<long> r(static_cast<std::size_t>(m), 0);
  if (to_remove > 0) {
    const long spacing = std::max(1L, n / to_remove);
    long placed = 0;
    for (long i = spacing; i <= m && placed < to_remove; i += spacing, ++placed) {
      r[static_cast<std::size_t>(i - 1)] = 1;
    }
    r.back() += to_remove - placed;
  }
  return CensoringScheme(n, std::move(r));
}

bool CensoringScheme::is_type2() const noexcept {
  return std::all_of(removals_.begin(), removals_.end() - 1, [](long r) { return r == 0; });
}

bool CensoringScheme::is_complete() const noexcept { return m() == n_; }

std::string cause_mode_name(CauseMode mode) {
  return mode == CauseMode::LatentMin ? "latent-min" : "bernoulli-half";
}

CauseMode parse_cause_mode(const std::string& name) {
  if (name == "latent-min" || name == "latent") return CauseMode::LatentMin;
  if (name == "bernoulli-half" || name == "bernoulli") return CauseMode::BernoulliHalf;
  throw DomainError("unknown cause mode '" + name + "' (valid: latent-min, bernoulli-half)");
}

ProgressiveSample generate(const ModelParams& mp, const CensoringScheme& scheme, CauseMode mode, Rng& rng) {
  const auto n = static_cast<std::size_t>(scheme.n());
  std::vector<LatentDraw> alive;
  alive.reserve(n);
  const RiskParams pooled = mp.pooled();
  for (std::size_t i = 0; i < n; ++i) {
    if (mode == CauseMode::LatentMin) {
      alive.push_back(sample_latent_pair(mp, rng));
    } else {
      const double t = sample(pooled, rng);
      alive.push_back({t, rng.coin() ? Cause::Two : Cause::One});
    }
  }
  std::sort(alive.begin(), alive.end(), [](const LatentDraw& a, const LatentDraw& b) { return a.time < b.time; });

  std::vector<Record> records;
  records.reserve(scheme.removals().size());
  std::size_t head = 0;  // alive[head..] are the survivors, still sorted
  for (long r : scheme.removals()) {
    if (head >= alive.size()) throw DomainError("infeasible scheme: no survivors left to fail");
    const LatentDraw failed = alive[head++];
    records.push_back({failed.time, failed.cause, r});
    const auto survivors = alive.size() - head;
    if (static_cast<std::size_t>(r) > survivors) throw DomainError("infeasible scheme: removals exceed survivors");
    // Partial Fisher-Yates over the survivor positions picks r distinct units.
    std::vector<std::size_t> pos(survivors);
    std::iota(pos.begin(), pos.end(), head);
    for (long k = 0; k < r; ++k) {
      const auto j = static_cast<std::size_t>(k) + rng.index(survivors - static_cast<std::size_t>(k));
      std::swap(pos[static_cast<std::size_t>(k)], pos[j]);
    }
    std::vector<bool> drop(alive.size(), false);
    for (long k = 0; k < r; ++k) drop[pos[static_cast<std::size_t>(k)]] = true;
    std::size_t out = head;
    for (std::size_t i = head; i < alive.size(); ++i) {
      if (!drop[i]) alive[out++] = alive[i];
    }
    alive.resize(out);
  }
  return ProgressiveSample(std::move(records), scheme.n());
}

ProgressiveSample generate(const SimSpec& spec) {
  Rng rng(spec.seed);
  return generate(spec.params, spec.scheme, spec.cause_mode, rng);
}

std::vector<SimSpec> scheme_catalog() {
  constexpr long n = 200;
  return {
      {"scheme1", ModelParams(1.0, 0.6, 0.3, 0.1), CensoringScheme::complete(n)},
      {"scheme2", ModelParams(1.0, 0.6, 0.3, 0.1), CensoringScheme::spread(n)},
      {"scheme3", ModelParams(1.0, 1.0, 0.3, 0.1), CensoringScheme::complete(n)},
      {"scheme4", ModelParams(1.0, 1.0, 0.3, 0.1), CensoringScheme::spread(n)},
  };
}

SimSpec catalog_scheme(int number, std::uint64_t seed, CauseMode mode) {
  auto catalog = scheme_catalog();
  if (number < 1 || number > static_cast<int>(catalog.size())) {
    throw DomainError("unknown scheme " + std::to_string(number) + " (valid schemes: 1, 2, 3, 4)");
  }
  SimSpec spec = catalog[static_cast<std::size_t>(number - 1)];
  spec.seed = seed;
  spec.cause_mode = mode;
  return spec;
}

}  // namespace mwcr
