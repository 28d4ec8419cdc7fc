#pragma once

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "ifm/distribution.hpp"
#include "ifm/state.hpp"

namespace ifm {

/// Two-mode splitter with power transmission T; reflectivity is 1-T.
struct BeamSplitterElement {
  std::string mode_a;
  std::string mode_b;
  double transmission = 0.5;
};

struct PhaseElement {
  std::string mode;
  double phase = 0.0;  // radians
};

/// Perfect absorber. With present=false it is a dud and leaves the state
/// untouched; with present=true any amplitude on `mode` turns into classical
/// probability under `outcome_label`.
struct AbsorberElement {
  std::string mode;
  bool present = true;
  std::string outcome_label = "explosion";
};

/// Row-major 2x2 splitter matrix [[t, i*r], [i*r, t]] with t = sqrt(T) and
/// r = sqrt(1-T). Unitary for every T in [0,1]; T=0 is a pure mirror and T=1
/// a pure window.
inline std::array<Amplitude, 4> beam_splitter_matrix(double transmission) {
  if (!(transmission >= 0.0 && transmission <= 1.0))
    throw std::domain_error("transmission must lie in [0,1]");
  const double t = std::sqrt(transmission);
  const double r = std::sqrt(1.0 - transmission);
  return {Amplitude{t, 0.0}, Amplitude{0.0, r}, Amplitude{0.0, r}, Amplitude{t, 0.0}};
}

inline PhotonState apply_beam_splitter(PhotonState state, const BeamSplitterElement& bs) {
  const auto u = beam_splitter_matrix(bs.transmission);
  const std::size_t ia = mode_index(state, bs.mode_a);
  const std::size_t ib = mode_index(state, bs.mode_b);
  const Amplitude a = state.modes[ia].amp;
  const Amplitude b = state.modes[ib].amp;
  state.modes[ia].amp = u[0] * a + u[1] * b;
  state.modes[ib].amp = u[2] * a + u[3] * b;
  return state;
}

inline PhotonState apply_phase(PhotonState state, const PhaseElement& ph) {
  state.modes[mode_index(state, ph.mode)].amp *= std::polar(1.0, ph.phase);
  return state;
}

inline PhotonState apply_absorber(PhotonState state, const AbsorberElement& absorber) {
  const std::size_t i = mode_index(state, absorber.mode);
  if (!absorber.present) return state;
  const double p = std::norm(state.modes[i].amp);
  if (p > 0.0) state.terminal[absorber.outcome_label] += p;
  state.modes[i].amp = Amplitude{0.0, 0.0};
  return state;
}

/// Projects the remaining amplitudes onto detector outcomes and merges in the
/// terminal branches. Every mode still carrying amplitude must be covered by
/// `detector_map`; covered modes always contribute an entry, even at
/// probability zero.
inline OutcomeDistribution read_detectors(const PhotonState& state,
                                          const std::map<std::string, std::string>& detector_map) {
  for (const auto& m : state.modes)
    if (std::norm(m.amp) > 0.0 && detector_map.find(m.mode) == detector_map.end())
      throw DetectorCoverageError(m.mode);
  OutcomeDistribution dist;
  dist.probs = state.terminal;
  for (const auto& [mode_id, label] : detector_map)
    dist.probs[label] += std::norm(state.modes[mode_index(state, mode_id)].amp);
  return dist;
}

}  // namespace ifm
