#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ifm/elements.hpp"

namespace ifm {

using NetworkElement = std::variant<BeamSplitterElement, PhaseElement, AbsorberElement>;

/// Interferometer description: named modes, the input mode, elements applied
/// in list order (no topology inference), and a detector label per mode.
struct NetworkSpec {
  std::vector<std::string> modes;
  std::string input_mode;
  std::vector<NetworkElement> elements;
  std::map<std::string, std::string> detector_map;
};

/// Which arm of a two-arm interferometer the object sits on, named relative
/// to the first splitter.
enum class Arm { reflected, transmitted };

namespace detail {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
}  // namespace detail

inline PhotonState apply_element(PhotonState state, const BeamSplitterElement& e) {
  return apply_beam_splitter(std::move(state), e);
}
inline PhotonState apply_element(PhotonState state, const PhaseElement& e) {
  return apply_phase(std::move(state), e);
}
inline PhotonState apply_element(PhotonState state, const AbsorberElement& e) {
  return apply_absorber(std::move(state), e);
}
inline PhotonState apply_element(PhotonState state, const NetworkElement& element) {
  return std::visit(
      [s = std::move(state)](const auto& e) mutable { return apply_element(std::move(s), e); },
      element);
}

inline void validate_network(const NetworkSpec& spec) {
  auto known = [&](const std::string& id) {
    return std::find(spec.modes.begin(), spec.modes.end(), id) != spec.modes.end();
  };
  if (!known(spec.input_mode)) throw ModeError(spec.input_mode);
  for (const auto& element : spec.elements) {
    std::visit(detail::Overloaded{
                   [&](const BeamSplitterElement& e) {
                     if (!known(e.mode_a)) throw ModeError(e.mode_a);
                     if (!known(e.mode_b)) throw ModeError(e.mode_b);
                   },
                   [&](const PhaseElement& e) {
                     if (!known(e.mode)) throw ModeError(e.mode);
                   },
                   [&](const AbsorberElement& e) {
                     if (!known(e.mode)) throw ModeError(e.mode);
                   },
               },
               element);
  }
  for (const auto& id : spec.modes)
    if (spec.detector_map.find(id) == spec.detector_map.end()) throw DetectorCoverageError(id);
}

/// Exact propagation: unit amplitude on the input mode, elements in order,
/// then the detector readout. No sampling anywhere on this path.
inline OutcomeDistribution run_network(const NetworkSpec& spec) {
  validate_network(spec);
  PhotonState state = make_photon(spec.modes, spec.input_mode);
  for (const auto& element : spec.elements) state = apply_element(std::move(state), element);
  return read_detectors(state, spec.detector_map);
}

/// Transmission of the second splitter that closes the dark port for a first
/// splitter of transmission t1. Under the fixed convention the D2 amplitude is
/// t1*t2 - r1*r2, which vanishes exactly when T2 = 1 - T1.
inline double tune_dark_port(double t1) {
  if (t1 == 0.0 || t1 == 1.0)
    throw DegenerateNetworkError("no interference to tune at T=0 or T=1");
  if (!(t1 > 0.0 && t1 < 1.0)) throw std::domain_error("t1 must lie in (0,1)");
  return 1.0 - t1;
}

/// Two-arm interferometer: splitter t1, an absorber slot on one arm, splitter
/// t2. The first splitter's reflected output is the "lower" arm and hosts the
/// object by default. Detectors: D1 on the lower output, D2 on the upper
/// output (the dark port when t2 = tune_dark_port(t1)).
inline NetworkSpec build_mz(double t1, double t2, bool object_present,
                            Arm object_arm = Arm::reflected) {
  NetworkSpec spec;
  spec.modes = {"upper", "lower"};
  spec.input_mode = "upper";
  spec.elements.push_back(BeamSplitterElement{"upper", "lower", t1});
  spec.elements.push_back(AbsorberElement{
      object_arm == Arm::reflected ? "lower" : "upper", object_present, "explosion"});
  spec.elements.push_back(BeamSplitterElement{"upper", "lower", t2});
  spec.detector_map = {{"upper", "D2"}, {"lower", "D1"}};
  return spec;
}

}  // namespace ifm
