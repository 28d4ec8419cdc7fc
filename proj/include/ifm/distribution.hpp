#pragma once

#include <map>
#include <string>

namespace ifm {

/// Probabilities keyed by outcome label. A well-formed distribution sums to 1
/// within 1e-12. Labels iterate in lexicographic order, which is also the
/// order the Monte Carlo sampler walks when inverting the CDF.
struct OutcomeDistribution {
  std::map<std::string, double> probs;

  /// Probability of `label`; absent labels count as 0.
  double prob(const std::string& label) const {
    auto it = probs.find(label);
    return it == probs.end() ? 0.0 : it->second;
  }

  double sum() const {
    double total = 0.0;
    for (const auto& [label, p] : probs) total += p;
    return total;
  }
};

}  // namespace ifm
