#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "euler1d/scheme.hpp"

namespace euler1d {

/// zeta-shifted invariant coordinates of an even-level profile:
/// zhat_j = z(u_j) - I_j, what_j = w(u_j) - I_j over j in J_0.
struct ShiftedState {
  std::vector<double> zhat, what;

  int size() const { return static_cast<int>(zhat.size()); }
};

struct FixedPointReport {
  int iterations = 0;
  std::vector<double> residual_sup, residual_l1;
  bool converged = false;
  double certificate_residual = -1.0;  // fresh map evaluation at the fixed point
  double periodicity_l1 = -1.0;
  double periodicity_sup = -1.0;
  double max_av = 0.0;  // largest |a v| seen in the velocity reconstruction
};

ShiftedState to_shifted(const StaggeredProfile& p, const SchemeConstants& c, const GasParams& gp,
                        const GridSpec& g);

/// Inverse of to_shifted. The density follows directly from what - zhat; the
/// velocities are solved left to right, each cell reducing to the quadratic
/// a v^2 - v + b = 0 with a = dx rho / 2, taken on the branch continuous as
/// a -> 0 (v = 2b / (1 + sqrt(1 - 4ab))). Throws ReconstructionError when a
/// discriminant goes negative.
StaggeredProfile from_shifted(const ShiftedState& s, const SchemeConstants& c,
                              const GasParams& gp, const GridSpec& g, double* max_av = nullptr);

/// One period of the recurrence in shifted coordinates:
/// to_shifted . run_period . from_shifted.
ShiftedState f_map(const ShiftedState& s, const StepperConfig& cfg);

/// Damped Picard iteration x <- (1 - damping) x + damping F(x). Stops when the
/// sup-norm residual drops below tol; throws DivergenceError when the residual
/// grows tenfold over 20 iterates. On success the report carries the
/// independently re-verified certificate residual and the physical
/// periodicity residuals of the reconstructed orbit.
std::pair<ShiftedState, FixedPointReport> find_fixed_point(
    const ShiftedState& guess, const StepperConfig& cfg, double tol, int max_iter,
    double damping, const std::function<ShiftedState(const ShiftedState&)>& map = {});

/// Discrete L1 and sup norms of the componentwise difference of two profiles
/// on the same grid and parity.
std::pair<double, double> periodicity_residual(const StaggeredProfile& a,
                                               const StaggeredProfile& b, const GridSpec& g);

}  // namespace euler1d
