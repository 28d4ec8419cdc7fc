#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "ifm/network.hpp"

namespace ifm {

/// Result of one named protocol: the exact outcome distribution, the
/// conditional efficiency P(success)/(P(success)+P(failure)), and the expected
/// number of rounds where the protocol repeats (1 for single-shot schemes).
struct ProtocolOutcome {
  OutcomeDistribution distribution;
  double efficiency = 0.0;
  double rounds_expected = 1.0;
};

struct ZenoConfig {
  std::int64_t cycles = 1;  // number of coupling stages, N >= 1
  bool object_present = true;
};

struct CavityConfig {
  double coupler_transmission = 0.001;  // power crossing probability per bounce
  std::int64_t bounces = 50;
  bool absorber_present = true;
};

/// P(success)/(P(success)+P(failure)); 0 when both probabilities vanish.
/// Labels absent from the distribution count as probability 0.
inline double efficiency(const OutcomeDistribution& dist, const std::string& success_label,
                         const std::string& failure_label) {
  const double s = dist.prob(success_label);
  const double f = dist.prob(failure_label);
  if (s + f <= 0.0) return 0.0;
  return s / (s + f);
}

/// Single shot through a dark-port-tuned interferometer whose first splitter
/// has reflectivity R; the absorbing object, when present, blocks the
/// reflected arm. Success outcome is a D2 click: it can only happen when the
/// object has broken the interference.
inline ProtocolOutcome ev_mine_test(double reflectivity, bool object_present) {
  if (reflectivity == 0.0 || reflectivity == 1.0)
    throw DegenerateNetworkError("reflectivity 0 or 1 leaves no dark port to tune");
  if (!(reflectivity > 0.0 && reflectivity < 1.0))
    throw std::domain_error("reflectivity must lie in (0,1)");
  const double t1 = 1.0 - reflectivity;
  ProtocolOutcome out;
  out.distribution = run_network(build_mz(t1, tune_dark_port(t1), object_present));
  out.efficiency = efficiency(out.distribution, "D2", "explosion");
  out.rounds_expected = 1.0;
  return out;
}

/// Repeats the single-shot test with a fresh photon after every D1 click until
/// D2 (success) or absorption (failure). Rounds are independent, so the
/// terminating distribution is the per-round one conditioned on not seeing D1,
/// and the efficiency comes out as (1-R)/(2-R) -> 1/2 for small R.
inline ProtocolOutcome repeated_ev(double reflectivity) {
  const ProtocolOutcome single = ev_mine_test(reflectivity, true);
  const double p_success = single.distribution.prob("D2");
  const double p_failure = single.distribution.prob("explosion");
  const double p_stop = p_success + p_failure;
  ProtocolOutcome out;
  out.distribution.probs["D1"] = 0.0;  // D1 never terminates the repeated run
  out.distribution.probs["D2"] = p_success / p_stop;
  out.distribution.probs["explosion"] = p_failure / p_stop;
  out.efficiency = efficiency(out.distribution, "D2", "explosion");
  out.rounds_expected = 1.0 / p_stop;  // geometric stopping time
  return out;
}

/// Chain of N identical weak couplings, each a splitter with T = cos^2(pi/2N)
/// between a safe mode and the object mode, the object absorbing after every
/// stage when present. With the object in place the photon survives in the
/// safe mode with probability cos^{2N}(pi/2N) -> 1 for large N; without it the
/// couplings compose to a quarter rotation and the photon leaves entirely on
/// the object side. Ending in the safe mode is the success outcome.
inline ProtocolOutcome zeno_ifm(const ZenoConfig& cfg) {
  if (cfg.cycles < 1) throw std::domain_error("cycles must be >= 1");
  const double theta = std::numbers::pi / (2.0 * static_cast<double>(cfg.cycles));
  const double c = std::cos(theta);
  const BeamSplitterElement stage{"safe", "object", c * c};
  const AbsorberElement object{"object", cfg.object_present, "explosion"};
  PhotonState state = make_photon({"safe", "object"}, "safe");
  for (std::int64_t n = 0; n < cfg.cycles; ++n) {
    state = apply_beam_splitter(std::move(state), stage);
    state = apply_absorber(std::move(state), object);
  }
  ProtocolOutcome out;
  out.distribution = read_detectors(state, {{"safe", "safe"}, {"object", "object_side"}});
  out.efficiency = efficiency(out.distribution, "safe", "explosion");
  out.rounds_expected = 1.0;
  return out;
}

/// Two cavities separated by a weakly transmitting mirror. Each bounce rotates
/// amplitude toward the right side (crossing probability sin^2 theta equal to
/// the coupler transmission); an absorber on the right, when present, eats the
/// crossed amplitude after every bounce. Returns {left, right, absorbed}.
inline OutcomeDistribution xray_cavity(const CavityConfig& cfg) {
  if (!(cfg.coupler_transmission > 0.0 && cfg.coupler_transmission < 1.0))
    throw std::domain_error("coupler_transmission must lie in (0,1)");
  if (cfg.bounces < 0) throw std::domain_error("bounces must be >= 0");
  const BeamSplitterElement bounce{"left", "right", 1.0 - cfg.coupler_transmission};
  const AbsorberElement absorber{"right", cfg.absorber_present, "absorbed"};
  PhotonState state = make_photon({"left", "right"}, "left");
  for (std::int64_t n = 0; n < cfg.bounces; ++n) {
    state = apply_beam_splitter(std::move(state), bounce);
    state = apply_absorber(std::move(state), absorber);
  }
  OutcomeDistribution dist = read_detectors(state, {{"left", "left"}, {"right", "right"}});
  if (dist.probs.find("absorbed") == dist.probs.end()) dist.probs["absorbed"] = 0.0;
  return dist;
}

}  // namespace ifm
