#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace euler1d {

/// Invalid run configuration or malformed input file.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed (root find did not converge, too many
/// negative-density clamps, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-point iteration diverged; carries the residual history.
struct DivergenceError : std::runtime_error {
  std::vector<double> residual_history;
  DivergenceError(const std::string& msg, std::vector<double> history)
      : std::runtime_error(msg), residual_history(std::move(history)) {}
};

/// Velocity reconstruction from shifted coordinates failed at a cell.
struct ReconstructionError : std::runtime_error {
  int cell_index;
  ReconstructionError(const std::string& msg, int index)
      : std::runtime_error(msg), cell_index(index) {}
};

}  // namespace euler1d
