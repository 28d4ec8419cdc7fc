#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "ifm/distribution.hpp"

namespace ifm {

/// Outcome counts for a batch of sampled trials, together with everything
/// needed to reproduce them bit for bit.
struct TrialLedger {
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 0;
  std::map<std::string, std::uint64_t> counts;
};

namespace detail {

// splitmix64 finalizer (Steele, Lea & Flood 2014; the SplittableRandom mix).
inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline void check_distribution(const OutcomeDistribution& dist) {
  double total = 0.0;
  for (const auto& [label, p] : dist.probs) {
    if (!(p >= 0.0)) throw std::domain_error("negative probability for '" + label + "'");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::domain_error("distribution must sum to 1");
}

/// 99.9% chi-square critical values for 1..32 degrees of freedom
/// (chi2.ppf(0.999, dof), SciPy 1.11).
inline constexpr double kChiSquareCrit999[32] = {
    10.827566, 13.815511, 16.266236, 18.466827, 20.515006, 22.457744, 24.321886, 26.124482,
    27.877165, 29.588298, 31.264134, 32.909490, 34.528179, 36.123274, 37.697298, 39.252355,
    40.790217, 42.312396, 43.820196, 45.314747, 46.797038, 48.267942, 49.728232, 51.178598,
    52.619656, 54.051962, 55.476020, 56.892285, 58.301173, 59.703064, 61.098306, 62.487219,
};

inline double chi_square_crit_999(int dof) {
  if (dof <= 0) return 0.0;
  if (dof <= 32) return kChiSquareCrit999[dof - 1];
  // Wilson-Hilferty approximation past the table
  const double z = 3.0902323061678132;  // standard normal 0.999 quantile
  const double c = 2.0 / (9.0 * static_cast<double>(dof));
  const double base = 1.0 - c + z * std::sqrt(c);
  return static_cast<double>(dof) * base * base * base;
}

}  // namespace detail

/// Uniform double in [0,1) for trial `index` of the stream `master_seed`:
/// the index-th output of splitmix64 seeded with master_seed, top 53 bits.
/// Counter based, so any trial is computable on its own; sampling is order
/// independent and partitions freely across workers. Changing this derivation
/// (or the lexicographic label order below) is a breaking change.
inline double trial_uniform(std::uint64_t master_seed, std::uint64_t index) {
  const std::uint64_t z =
      detail::splitmix64_finalize(master_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Draws trials [first, first + count) of the stream `master_seed` by inverse
/// CDF over the labels in lexicographic (map) order. Every distribution label
/// appears in the counts, including those never drawn.
inline TrialLedger sample_range(const OutcomeDistribution& dist, std::uint64_t first,
                                std::uint64_t count, std::uint64_t master_seed) {
  detail::check_distribution(dist);
  TrialLedger ledger;
  ledger.master_seed = master_seed;
  ledger.trials = count;
  for (const auto& [label, p] : dist.probs) ledger.counts[label] = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double u = trial_uniform(master_seed, first + i);
    double cum = 0.0;
    const std::string* chosen = nullptr;
    for (const auto& [label, p] : dist.probs) {
      cum += p;
      if (u < cum) {
        chosen = &label;
        break;
      }
    }
    if (chosen == nullptr) chosen = &dist.probs.rbegin()->first;  // u past the fp cumsum
    ++ledger.counts[*chosen];
  }
  return ledger;
}

/// Trials [0, trials) of the stream `master_seed`.
inline TrialLedger sample(const OutcomeDistribution& dist, std::int64_t trials,
                          std::uint64_t master_seed) {
  if (trials < 0) throw std::domain_error("trials must be >= 0");
  return sample_range(dist, 0, static_cast<std::uint64_t>(trials), master_seed);
}

/// Folds in a ledger drawn from a disjoint trial range of the same stream.
inline void merge_ledgers(TrialLedger& into, const TrialLedger& from) {
  if (into.master_seed != from.master_seed)
    throw std::invalid_argument("cannot merge ledgers from different master seeds");
  into.trials += from.trials;
  for (const auto& [label, n] : from.counts) into.counts[label] += n;
}

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  bool pass = false;
};

/// Pearson test of the ledger against the exact distribution at the 99.9%
/// level. Outcomes with expected count below 5 are merged into a single rest
/// bucket; observed counts on labels the distribution gives zero probability
/// force a fail.
inline ChiSquareResult chi_square_check(const TrialLedger& ledger,
                                        const OutcomeDistribution& dist) {
  detail::check_distribution(dist);
  const double n = static_cast<double>(ledger.trials);
  std::map<std::string, std::pair<double, double>> cells;  // label -> (expected, observed)
  for (const auto& [label, p] : dist.probs) cells[label] = {p * n, 0.0};
  for (const auto& [label, c] : ledger.counts)
    cells[label].second = static_cast<double>(c);
  double statistic = 0.0;
  int buckets = 0;
  double rest_expected = 0.0;
  double rest_observed = 0.0;
  bool have_rest = false;
  for (const auto& [label, cell] : cells) {
    const auto [expected, observed] = cell;
    if (expected >= 5.0) {
      statistic += (observed - expected) * (observed - expected) / expected;
      ++buckets;
    } else {
      rest_expected += expected;
      rest_observed += observed;
      have_rest = true;
    }
  }
  if (have_rest && !(rest_expected == 0.0 && rest_observed == 0.0)) {
    ++buckets;
    if (rest_expected > 0.0)
      statistic += (rest_observed - rest_expected) * (rest_observed - rest_expected) / rest_expected;
    else
      statistic = std::numeric_limits<double>::infinity();
  }
  ChiSquareResult result;
  result.statistic = statistic;
  result.dof = buckets > 0 ? buckets - 1 : 0;
  result.pass = statistic <= detail::chi_square_crit_999(result.dof);
  return result;
}

}  // namespace ifm
