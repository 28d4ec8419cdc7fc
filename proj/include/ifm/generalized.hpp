#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ifm/distribution.hpp"
#include "ifm/state.hpp"

namespace ifm {

/// Abstract measurement scheme: the device part is prepared in
/// chi = alpha*Phi1 + beta*Phi2, the system enters either as the protected
/// state Psi (whose meeting with Phi1 triggers the destructive record) or as
/// an orthogonal state, and the readout discriminates chi from chi_perp.
struct GeneralizedIfmConfig {
  Amplitude alpha{0.0, 0.0};
  Amplitude beta{0.0, 0.0};
  bool system_is_psi = true;
};

/// Outcome probabilities over {chi, chi_perp, explosion}.
/// `post_system_state_on_chi_perp` is set (always to "psi") exactly when the
/// chi_perp branch has nonzero probability: that click certifies the system
/// state and leaves it undisturbed.
struct IfmResult {
  OutcomeDistribution probs;
  std::optional<std::string> post_system_state_on_chi_perp;
};

/// Evolves Psi x chi -> alpha*expl + beta*Psi*(conj(beta)*chi + alpha*chi_perp),
/// with chi_perp = -conj(beta)*Phi1 + alpha*Phi2; an orthogonal system leaves
/// the device in chi unchanged.
inline IfmResult run_generalized_ifm(const GeneralizedIfmConfig& cfg) {
  const double pa = std::norm(cfg.alpha);
  const double pb = std::norm(cfg.beta);
  if (std::abs(pa + pb - 1.0) > 1e-12)
    throw std::domain_error("(alpha, beta) must satisfy |alpha|^2 + |beta|^2 = 1");
  IfmResult result;
  if (cfg.system_is_psi) {
    result.probs.probs["explosion"] = pa;
    result.probs.probs["chi"] = std::norm(cfg.beta * std::conj(cfg.beta));
    result.probs.probs["chi_perp"] = std::norm(cfg.beta * cfg.alpha);
    if (result.probs.probs["chi_perp"] > 0.0) result.post_system_state_on_chi_perp = "psi";
  } else {
    result.probs.probs["chi"] = 1.0;
    result.probs.probs["chi_perp"] = 0.0;
    result.probs.probs["explosion"] = 0.0;
  }
  return result;
}

/// The two-arm interferometer as an instance of the scheme: the first splitter
/// of reflectivity R prepares the device with |alpha|^2 = R on the object arm,
/// and D2 behind the second splitter tests for chi_perp. Relabeling
/// chi -> D1 and chi_perp -> D2 reproduces the single-shot distribution.
inline GeneralizedIfmConfig mz_as_generalized_ifm(double reflectivity) {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
    throw std::domain_error("reflectivity must lie in [0,1]");
  GeneralizedIfmConfig cfg;
  cfg.alpha = Amplitude{std::sqrt(reflectivity), 0.0};
  cfg.beta = Amplitude{std::sqrt(1.0 - reflectivity), 0.0};
  cfg.system_is_psi = true;
  return cfg;
}

}  // namespace ifm
