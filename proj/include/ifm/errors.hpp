#pragma once

#include <stdexcept>
#include <string>

namespace ifm {

/// An element or detector map named a mode that is not part of the state.
class ModeError : public std::invalid_argument {
 public:
  explicit ModeError(const std::string& mode_id)
      : std::invalid_argument("unknown mode '" + mode_id + "'"), mode_id_(mode_id) {}

  const std::string& mode_id() const noexcept { return mode_id_; }

 private:
  std::string mode_id_;
};

/// A mode still carrying amplitude has no detector assigned to it.
class DetectorCoverageError : public std::logic_error {
 public:
  explicit DetectorCoverageError(const std::string& mode_id)
      : std::logic_error("mode '" + mode_id + "' carries amplitude but has no detector"),
        mode_id_(mode_id) {}

  const std::string& mode_id() const noexcept { return mode_id_; }

 private:
  std::string mode_id_;
};

/// Splitter settings that leave nothing to interfere (T exactly 0 or 1 where
/// a dark port has to be tuned).
class DegenerateNetworkError : public std::domain_error {
 public:
  explicit DegenerateNetworkError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ifm
