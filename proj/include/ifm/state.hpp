#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifm/errors.hpp"

namespace ifm {

using Amplitude = std::complex<double>;

struct ModeAmp {
  std::string mode;
  Amplitude amp;
};

/// Single-photon state over named spatial modes. Coherent amplitudes live in
/// `modes`; `terminal` holds probability already split off into irreversible
/// classical records (absorptions, detector clicks). A terminal branch never
/// interferes again.
///
/// Invariant for states reachable from make_photon: sum of |amp|^2 plus the
/// terminal masses equals 1 within 1e-12.
struct PhotonState {
  std::vector<ModeAmp> modes;
  std::map<std::string, double> terminal;
};

inline std::size_t mode_index(const PhotonState& state, const std::string& mode_id) {
  for (std::size_t i = 0; i < state.modes.size(); ++i)
    if (state.modes[i].mode == mode_id) return i;
  throw ModeError(mode_id);
}

/// Photon injected with amplitude 1 on `input_mode`; every other mode empty.
inline PhotonState make_photon(const std::vector<std::string>& mode_ids,
                               const std::string& input_mode) {
  PhotonState state;
  state.modes.reserve(mode_ids.size());
  for (const auto& id : mode_ids) {
    for (const auto& existing : state.modes)
      if (existing.mode == id) throw std::invalid_argument("duplicate mode '" + id + "'");
    state.modes.push_back({id, Amplitude{0.0, 0.0}});
  }
  state.modes[mode_index(state, input_mode)].amp = Amplitude{1.0, 0.0};
  return state;
}

inline double coherent_norm(const PhotonState& state) {
  double n = 0.0;
  for (const auto& m : state.modes) n += std::norm(m.amp);
  return n;
}

inline double terminal_sum(const PhotonState& state) {
  double n = 0.0;
  for (const auto& [label, p] : state.terminal) n += p;
  return n;
}

/// Coherent norm plus terminal mass.
inline double total_probability(const PhotonState& state) {
  return coherent_norm(state) + terminal_sum(state);
}

}  // namespace ifm
